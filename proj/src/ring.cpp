#include "leecodes/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <utility>

namespace leecodes {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt big_pow(std::int64_t base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

Modulus::Modulus(std::int64_t p, int s) : p_(p), s_(s), q_(1) {
  if (!is_prime(p)) throw InputError("modulus: p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw InputError("modulus: s must be positive");
  powers_.push_back(1);
  for (int i = 0; i < s; ++i) {
    if (q_ > kMaxOrder / p) throw InputError("modulus: p^s exceeds 2^31");
    q_ *= p;
    powers_.push_back(q_);
  }
}

int Modulus::valuation(std::int64_t a) const {
  if (a == 0) return s_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

std::int64_t Modulus::inverse(std::int64_t unit) const {
  unit = reduce(unit);
  if (unit % p_ == 0) throw InputError("inverse: " + std::to_string(unit) + " is not a unit");
  // extended Euclid on (unit, q)
  std::int64_t r0 = q_, r1 = unit, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - quot * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - quot * t1};
  }
  return reduce(t0);
}

std::string Modulus::name() const {
  return "Z/" + std::to_string(q_) + (s_ > 1 ? " (p=" + std::to_string(p_) + ", s=" + std::to_string(s_) + ")" : "");
}

RingVector::RingVector(Modulus m, std::vector<std::int64_t> entries) : m_(std::move(m)), e_(std::move(entries)) {
  for (auto x : e_)
    if (x < 0 || x >= m_.q()) throw InputError("ring vector entry " + std::to_string(x) + " outside [0, q)");
}

std::int64_t lee_weight(const Modulus& m, std::int64_t a) {
  if (a < 0 || a >= m.q()) throw InputError("lee_weight: element " + std::to_string(a) + " outside [0, q)");
  return std::min(a, m.q() - a);
}

std::int64_t lee_weight(const Modulus& m, std::span<const std::int64_t> v) {
  std::int64_t w = 0;
  for (auto a : v) w += std::min(a, m.q() - a);
  return w;
}

std::int64_t hamming_weight(std::span<const std::int64_t> v) {
  return std::count_if(v.begin(), v.end(), [](std::int64_t a) { return a != 0; });
}

std::int64_t lee_distance(const RingVector& u, const RingVector& v) {
  if (!(u.modulus() == v.modulus()) || u.size() != v.size()) throw InputError("lee_distance: shape mismatch");
  const auto& m = u.modulus();
  std::int64_t w = 0;
  for (std::size_t i = 0; i < u.size(); ++i) w += lee_weight(m, m.sub(u[i], v[i]));
  return w;
}

BigInt ideal_total_weight(const Modulus& m, int i) {
  if (i < 0 || i >= m.s()) throw InputError("ideal_total_weight: i must lie in [0, s-1]");
  const auto s = static_cast<unsigned long>(m.s());
  const auto ii = static_cast<unsigned long>(i);
  if (!m.odd()) return big_pow(2, 2 * s - ii - 2);
  BigInt num = big_pow(m.p(), 2 * s - ii) - big_pow(m.p(), ii);
  return num / 4;
}

Rational ambient_average_weight(const Modulus& m) {
  Rational r(ideal_total_weight(m, 0), big_pow(m.p(), static_cast<unsigned long>(m.s())));
  r.canonicalize();
  return r;
}

std::vector<int> gray_map(const RingVector& v) {
  if (!(v.modulus() == Modulus(2, 2))) throw InputError("gray_map: modulus must be Z/4");
  static constexpr int kTable[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<int> out;
  out.reserve(2 * v.size());
  for (auto a : v.entries()) {
    out.push_back(kTable[a][0]);
    out.push_back(kTable[a][1]);
  }
  return out;
}

}  // namespace leecodes
