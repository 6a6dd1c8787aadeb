#include <doctest.h>

#include "leecodes/ring.hpp"
#include "oracles.hpp"

using namespace leecodes;

namespace {

std::vector<Modulus> moduli_up_to(std::int64_t qmax) {
  std::vector<Modulus> out;
  for (std::int64_t p = 2; p <= qmax; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t q = p;
    for (int s = 1; q <= qmax; ++s, q *= p) out.emplace_back(p, s);
  }
  return out;
}

RingVector vec(const Modulus& m, std::vector<std::int64_t> e) { return RingVector(m, std::move(e)); }

}  // namespace

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Modulus(4, 1), InputError);
  CHECK_THROWS_AS(Modulus(1, 1), InputError);
  CHECK_THROWS_AS(Modulus(3, 0), InputError);
  CHECK_THROWS_AS(Modulus(2, 32), InputError);
  CHECK_NOTHROW(Modulus(2, 31));
  const Modulus m(3, 2);
  CHECK(m.q() == 9);
  CHECK(m.max_weight() == 4);
  CHECK(Modulus(2, 2).max_weight() == 2);
}

TEST_CASE("element Lee weight") {
  CHECK(lee_weight(Modulus(2, 2), 3) == 1);
  CHECK(lee_weight(Modulus(5, 1), 0) == 0);
  CHECK(lee_weight(Modulus(3, 2), 5) == 4);
  CHECK_THROWS_AS(lee_weight(Modulus(5, 1), 5), InputError);
  CHECK_THROWS_AS(lee_weight(Modulus(5, 1), -1), InputError);
}

TEST_CASE("vector weights") {
  CHECK(lee_weight(vec(Modulus(2, 2), {2, 2})) == 4);
  CHECK(lee_weight(vec(Modulus(5, 1), {1, 2})) == 3);
  CHECK(lee_weight(vec(Modulus(5, 1), {0, 0, 0})) == 0);
  CHECK(hamming_weight(vec(Modulus(5, 1), {2, 0, 1})) == 2);
  CHECK(hamming_weight(vec(Modulus(5, 1), {0, 0})) == 0);
  CHECK(hamming_weight(vec(Modulus(5, 1), {1, 2, 1, 3})) == 4);
  CHECK_THROWS_AS(vec(Modulus(5, 1), {5}), InputError);
}

TEST_CASE("sign symmetry of the element weight for q <= 343") {
  for (const auto& m : moduli_up_to(343))
    for (std::int64_t a = 0; a < m.q(); ++a) {
      REQUIRE(lee_weight(m, a) == lee_weight(m, m.neg(a)));
      REQUIRE(lee_weight(m, a) == oracle::lee(m, a));
      REQUIRE(lee_weight(m, a) <= m.max_weight());
    }
}

TEST_CASE("ideal total weights") {
  CHECK(ideal_total_weight(Modulus(5, 1), 0) == 6);
  CHECK(ideal_total_weight(Modulus(2, 2), 0) == 4);
  CHECK(ideal_total_weight(Modulus(3, 2), 1) == 6);
  CHECK_THROWS_AS(ideal_total_weight(Modulus(3, 2), 2), InputError);
  CHECK_THROWS_AS(ideal_total_weight(Modulus(3, 2), -1), InputError);
}

TEST_CASE("ideal total weight equals the brute-force sum for q <= 343") {
  int checked = 0;
  for (const auto& m : moduli_up_to(343))
    for (int i = 0; i < m.s(); ++i) {
      BigInt sum = 0;
      for (std::int64_t a = 0; a < m.q(); a += m.power(i)) sum += oracle::lee(m, a);
      REQUIRE(ideal_total_weight(m, i) == sum);
      ++checked;
    }
  CHECK(checked > 80);
}

TEST_CASE("ambient average weight") {
  CHECK(ambient_average_weight(Modulus(2, 2)) == 1);
  CHECK(ambient_average_weight(Modulus(5, 1)) == Rational(6, 5));
  Rational fig(59048, 972);
  fig.canonicalize();
  CHECK(ambient_average_weight(Modulus(3, 5)) == fig);
  for (const auto& m : moduli_up_to(343)) {
    BigInt sum = 0;
    for (std::int64_t a = 0; a < m.q(); ++a) sum += oracle::lee(m, a);
    Rational mean(sum, m.q());
    mean.canonicalize();
    REQUIRE(ambient_average_weight(m) == mean);
  }
}

TEST_CASE("sandwich inequality for random vectors") {
  std::mt19937_64 rng(7);
  for (const auto& m : moduli_up_to(27))
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      std::vector<std::int64_t> e(n);
      for (auto& a : e) a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m.q()));
      const RingVector v(m, e);
      REQUIRE(hamming_weight(v) <= lee_weight(v));
      REQUIRE(lee_weight(v) <= m.max_weight() * hamming_weight(v));
    }
}

TEST_CASE("Gray map") {
  const Modulus z4(2, 2);
  CHECK(gray_map(vec(z4, {2, 2})) == std::vector<int>{1, 1, 1, 1});
  CHECK(gray_map(vec(z4, {0})) == std::vector<int>{0, 0});
  CHECK(gray_map(vec(z4, {1, 3})) == std::vector<int>{0, 1, 1, 0});
  CHECK_THROWS_AS(gray_map(vec(Modulus(2, 3), {1})), InputError);
}

TEST_CASE("Gray map is an isometry on (Z/4)^n for n <= 4") {
  const Modulus z4(2, 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<RingVector> all;
    std::vector<std::int64_t> e(n, 0);
    while (true) {
      all.emplace_back(z4, e);
      std::size_t j = 0;
      while (j < n && ++e[j] == 4) e[j++] = 0;
      if (j == n) break;
    }
    for (const auto& u : all) {
      const auto gu = gray_map(u);
      for (const auto& v : all) {
        const auto gv = gray_map(v);
        int dh = 0;
        for (std::size_t i = 0; i < gu.size(); ++i) dh += gu[i] != gv[i];
        REQUIRE(dh == lee_distance(u, v));
      }
    }
  }
}
