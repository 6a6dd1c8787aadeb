#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace leecodes {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Malformed or out-of-range input (CLI exit code 1).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Work estimate above the configured enumeration budget (CLI exit code 2).
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t requested, std::uint64_t budget)
      : std::runtime_error(what), requested_(requested), budget_(budget) {}
  std::uint64_t requested() const { return requested_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

/// The ring Z/p^s Z. Elements are stored canonically in [0, q).
class Modulus {
 public:
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 31;

  Modulus(std::int64_t p, int s);

  std::int64_t p() const { return p_; }
  int s() const { return s_; }
  std::int64_t q() const { return q_; }
  /// Largest Lee weight of a single element, floor(q/2).
  std::int64_t max_weight() const { return q_ / 2; }
  bool odd() const { return p_ != 2; }

  /// p^e for 0 <= e <= s.
  std::int64_t power(int e) const { return powers_.at(static_cast<std::size_t>(e)); }

  std::int64_t reduce(std::int64_t a) const {
    a %= q_;
    return a < 0 ? a + q_ : a;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : q_ - a; }

  /// p-adic valuation of a canonical element; valuation(0) == s.
  int valuation(std::int64_t a) const;
  /// Inverse of a unit; throws InputError for non-units.
  std::int64_t inverse(std::int64_t unit) const;
  /// Smallest e with p^e * a == 0, i.e. log_p of the additive order.
  int order_exponent(std::int64_t a) const { return s_ - valuation(a); }

  /// Signed view of an element in [-M, M].
  std::int64_t signed_rep(std::int64_t a) const { return a > q_ / 2 ? a - q_ : a; }
  /// Canonical sign-class representative min(a, q - a).
  std::int64_t sign_class(std::int64_t a) const { return a == 0 ? 0 : std::min(a, q_ - a); }

  std::string name() const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.p_ == b.p_ && a.s_ == b.s_; }

 private:
  std::int64_t p_;
  int s_;
  std::int64_t q_;
  std::vector<std::int64_t> powers_;
};

/// A vector over Z/p^s Z with entries in [0, q).
class RingVector {
 public:
  RingVector(Modulus m, std::vector<std::int64_t> entries);
  static RingVector zero(Modulus m, std::size_t n) { return {m, std::vector<std::int64_t>(n, 0)}; }

  const Modulus& modulus() const { return m_; }
  std::size_t size() const { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::span<const std::int64_t> entries() const { return e_; }

  friend bool operator==(const RingVector& a, const RingVector& b) {
    return a.m_ == b.m_ && a.e_ == b.e_;
  }

 private:
  Modulus m_;
  std::vector<std::int64_t> e_;
};

std::int64_t lee_weight(const Modulus& m, std::int64_t a);
std::int64_t lee_weight(const Modulus& m, std::span<const std::int64_t> v);
inline std::int64_t lee_weight(const RingVector& v) { return lee_weight(v.modulus(), v.entries()); }

std::int64_t hamming_weight(std::span<const std::int64_t> v);
inline std::int64_t hamming_weight(const RingVector& v) { return hamming_weight(v.entries()); }

/// w_L(u - v).
std::int64_t lee_distance(const RingVector& u, const RingVector& v);

/// Sum of Lee weights over the ideal <p^i>, 0 <= i <= s-1, in closed form.
BigInt ideal_total_weight(const Modulus& m, int i);

/// Mean Lee weight of the whole ring.
Rational ambient_average_weight(const Modulus& m);

/// Z/4 Gray isometry 0->00, 1->01, 2->11, 3->10 applied componentwise.
std::vector<int> gray_map(const RingVector& v);

bool is_prime(std::int64_t p);
BigInt big_pow(std::int64_t base, unsigned long exp);

}  // namespace leecodes
