#include <doctest.h>

#include <sstream>

#include "leecodes/linear_code.hpp"
#include "leecodes/search.hpp"
#include "oracles.hpp"

using namespace leecodes;
using Rows = std::vector<std::vector<std::int64_t>>;

namespace {

LinearCode code(std::int64_t p, int s, const Rows& rows) {
  return LinearCode::from_generator(CodeMatrix::from_rows(Modulus(p, s), rows));
}

Rational brute_mean(const LinearCode& c) {
  BigInt total = 0;
  std::uint64_t count = 0;
  c.for_each_codeword([&](std::span<const std::int64_t> w) {
    total += lee_weight(c.modulus(), w);
    ++count;
  });
  Rational r(total, BigInt(std::to_string(count)));
  r.canonicalize();
  return r;
}

// every code of every subtype over m with length n, one per signed-permutation class
void for_each_small_code(const Modulus& m, int n, const std::function<void(const LinearCode&)>& f) {
  for (const auto& st : all_subtypes(m, n)) enumerate_codes(SearchSpace(m, n, st, Strategy::reduced), f);
}

}  // namespace

TEST_CASE("construction and parameters") {
  const auto c = code(5, 1, {{1, 2}});
  CHECK(c.type() == 1);
  CHECK(c.rank() == 1);
  CHECK(c.cardinality() == 5);

  const auto h = code(2, 2, {{2, 2}});
  CHECK(h.type() == Rational(1, 2));
  CHECK(h.rank() == 1);
  CHECK(h.subtype() == Subtype{0, 1});

  const auto z = code(3, 2, {{0, 0, 0}, {0, 0, 0}});
  CHECK(z.is_trivial());
  CHECK(z.rank() == 0);
  CHECK(z.cardinality() == 1);

  CHECK_THROWS_AS(LinearCode::from_generator(CodeMatrix::from_rows(Modulus(5, 1), {{1, 2}}), 3), InputError);
  CHECK_THROWS_AS(CodeMatrix(Modulus(5, 1), 2, 2, {1, 2, 3}), InputError);
}

TEST_CASE("redundant rows are removed by reduction") {
  const auto c = code(3, 2, {{1, 2, 0}, {2, 4, 0}, {3, 6, 0}, {0, 3, 3}});
  CHECK(c.subtype() == Subtype{1, 1});
  CHECK(oracle::words_of(c) == oracle::span_of_matrix(CodeMatrix::from_rows(Modulus(3, 2), {{1, 2, 0}, {0, 3, 3}})));
}

TEST_CASE("systematic form") {
  SUBCASE("mixed Z/4 code") {
    const auto c = code(2, 2, {{2, 0, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(c.subtype() == Subtype{1, 2});
    const auto sf = c.systematic_form();
    const Modulus& m = c.modulus();
    CHECK(sf.generator.at(0, 0) == 1);
    CHECK(sf.generator.at(1, 1) == 2);
    CHECK(sf.generator.at(2, 2) == 2);
    CHECK(sf.generator.at(1, 0) == 0);
    CHECK(sf.generator.at(2, 0) == 0);
    CHECK(sf.generator.at(2, 1) == 0);
    // the permuted code equals the span of the systematic generator
    std::set<oracle::Word> permuted;
    for (const auto& w : oracle::words_of(c)) {
      oracle::Word x(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) x[j] = w[sf.permutation[j]];
      permuted.insert(x);
    }
    CHECK(permuted == oracle::span(m, sf.generator.to_rows(), 3));
  }
  SUBCASE("identity") {
    const auto c = code(3, 2, {{1, 0}, {0, 1}});
    CHECK(c.subtype() == Subtype{2, 0});
    CHECK(c.systematic_form().generator.to_rows() == Rows{{1, 0}, {0, 1}});
  }
  SUBCASE("single scaled row") {
    const auto c = code(3, 2, {{3, 6}});
    CHECK(c.subtype() == Subtype{0, 1});
    CHECK(c.systematic_form().generator.to_rows() == Rows{{3, 6}});
  }
}

TEST_CASE("systematic shape on random codes") {
  std::mt19937_64 rng(11);
  for (const Modulus& m : {Modulus(2, 3), Modulus(3, 2), Modulus(3, 3), Modulus(5, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + rng() % 4;
      const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, n, rng));
      const auto sf = c.systematic_form();
      const auto vals = c.pivot_valuations();
      for (std::size_t r = 0; r < sf.generator.rows(); ++r) {
        REQUIRE(sf.generator.at(r, r) == m.power(vals[r]));
        for (std::size_t u = 0; u < r; ++u) REQUIRE(sf.generator.at(r, u) == 0);
        for (std::size_t j = 0; j < n; ++j) REQUIRE(oracle::valuation(m, sf.generator.at(r, j)) >= vals[r]);
      }
      std::set<oracle::Word> permuted;
      for (const auto& w : oracle::words_of(c)) {
        oracle::Word x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = w[sf.permutation[j]];
        permuted.insert(x);
      }
      REQUIRE(permuted == oracle::span(m, sf.generator.to_rows(), n));
    }
  }
}

TEST_CASE("dual codes") {
  SUBCASE("<(1,2)> over Z/5 is self-dual") {
    const auto c = code(5, 1, {{1, 2}});
    CHECK(c.dual() == c);
    CHECK(c.dual() == code(5, 1, {{3, 1}}));
  }
  SUBCASE("mixed Z/4 example") {
    const auto c = code(2, 2, {{0, 1, 1}, {2, 0, 0}, {0, 0, 2}});
    CHECK(c.dual() == code(2, 2, {{2, 0, 0}, {0, 2, 2}}));
  }
  SUBCASE("ambient space") {
    const auto a = LinearCode::ambient(Modulus(2, 2), 2);
    CHECK(a.dual().is_trivial());
    CHECK(a.dual().dual() == a);
  }
  SUBCASE("Z/5 example from the dual discussion") {
    const auto c = code(5, 1, {{1, 0, 3, 4}, {0, 1, 2, 3}});
    CHECK(c.dual() == code(5, 1, {{1, 0, 2, 2}, {0, 1, 4, 2}}));
  }
}

TEST_CASE("parity check annihilates the generator and matches the brute-force dual") {
  std::mt19937_64 rng(5);
  for (const Modulus& m : {Modulus(2, 2), Modulus(3, 2), Modulus(2, 3), Modulus(5, 1)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, n, rng));
      const auto h = c.parity_check();
      const auto words = oracle::words_of(c);
      REQUIRE(oracle::span_of_matrix(h) == oracle::dual(m, words, n));
      REQUIRE(oracle::words_of(c.dual()) == oracle::dual(m, words, n));
    }
  }
}

TEST_CASE("dual round trip and subtype law on every small code") {
  int checked = 0;
  for (const Modulus& m : {Modulus(2, 2), Modulus(3, 1), Modulus(2, 3), Modulus(3, 2)})
    for (int n = 1; n <= 4; ++n)
      for_each_small_code(m, n, [&](const LinearCode& c) {
        const auto d = c.dual();
        REQUIRE(d.dual() == c);
        // (n - K, k_s, ..., k_2)
        Subtype expect{n - c.rank()};
        for (int i = m.s() - 1; i >= 1; --i) expect.push_back(c.subtype()[static_cast<std::size_t>(i)]);
        REQUIRE(d.subtype() == expect);
        REQUIRE(d.type() == n - c.type());
        ++checked;
      });
  CHECK(checked > 1000);
}

TEST_CASE("codeword enumeration") {
  CHECK(code(2, 2, {{2, 2}}).codewords().size() == 2);
  CHECK(code(5, 1, {{1, 2}}).codewords().size() == 5);
  const auto z = LinearCode::zero(Modulus(3, 1), 2);
  const auto zw = z.codewords();
  REQUIRE(zw.size() == 1);
  CHECK(lee_weight(zw[0]) == 0);
  CHECK_THROWS_AS(LinearCode::ambient(Modulus(3, 2), 8).codewords(1000), BudgetError);
}

TEST_CASE("enumeration visits each word once, in a fixed order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Modulus m(3, 2);
    const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, 4, rng));
    std::vector<oracle::Word> seq;
    c.for_each_codeword([&](std::span<const std::int64_t> w) { seq.emplace_back(w.begin(), w.end()); });
    std::set<oracle::Word> unique(seq.begin(), seq.end());
    REQUIRE(unique.size() == seq.size());
    REQUIRE(BigInt(static_cast<unsigned long>(seq.size())) == c.cardinality());
    REQUIRE(unique == oracle::span_of_matrix(c.generator()));
    std::vector<oracle::Word> again;
    c.for_each_codeword([&](std::span<const std::int64_t> w) { again.emplace_back(w.begin(), w.end()); });
    REQUIRE(seq == again);
  }
}

TEST_CASE("minimum distances") {
  CHECK(code(2, 2, {{2, 2}}).min_lee_distance() == 4);
  CHECK(code(5, 1, {{2, 0, 1}, {1, 3, 4}}).min_lee_distance() == 2);
  CHECK(code(5, 1, {{1, 0, 3, 4}, {0, 1, 2, 3}}).min_lee_distance() == 4);
  CHECK(code(5, 1, {{1, 2}}).min_hamming_distance() == 2);
  CHECK(code(2, 2, {{2, 2}}).min_hamming_distance() == 2);
  CHECK(LinearCode::ambient(Modulus(5, 1), 2).min_hamming_distance() == 1);
  CHECK_THROWS_AS(LinearCode::zero(Modulus(5, 1), 2).min_lee_distance(), UndefinedDistanceError);
}

TEST_CASE("support subtype") {
  CHECK(code(3, 2, {{3, 6}}).support_subtype().counts == std::vector<int>{0, 2, 0});
  // coordinate 2 of <(1,3)> projects onto <3>
  const auto c = code(3, 2, {{1, 3}});
  CHECK(c.support_subtype().counts == std::vector<int>{1, 1, 0});
  CHECK(c.support_subtype().counts == oracle::support_subtype(c.modulus(), oracle::words_of(c), 2));
  CHECK(LinearCode::zero(Modulus(3, 2), 3).support_subtype().counts == std::vector<int>{0, 0, 3});
  CHECK(LinearCode::zero(Modulus(3, 2), 3).support_subtype().non_degenerate() == false);
}

TEST_CASE("support subtype matches the column-projection oracle") {
  std::mt19937_64 rng(17);
  for (const Modulus& m : {Modulus(2, 2), Modulus(2, 3), Modulus(3, 2), Modulus(3, 3), Modulus(5, 1)})
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, n, rng));
      const auto words = oracle::words_of(c);
      REQUIRE(c.support_subtype().counts == oracle::support_subtype(m, words, n));
      REQUIRE(c.support_subtype().total() == static_cast<int>(n));
    }
}

TEST_CASE("average Lee weight") {
  CHECK(code(2, 2, {{2, 2}}).average_lee_weight() == 2);
  CHECK(code(5, 1, {{1, 2}}).average_lee_weight() == Rational(12, 5));
  CHECK(LinearCode::zero(Modulus(5, 1), 3).average_lee_weight() == 0);
}

TEST_CASE("average Lee weight equals the brute-force mean on random codes") {
  std::mt19937_64 rng(2024);
  const std::vector<Modulus> moduli{Modulus(2, 1), Modulus(3, 1), Modulus(2, 2), Modulus(5, 1), Modulus(7, 1),
                                    Modulus(2, 3), Modulus(3, 2), Modulus(11, 1), Modulus(13, 1), Modulus(2, 4),
                                    Modulus(17, 1), Modulus(19, 1), Modulus(23, 1), Modulus(5, 2), Modulus(3, 3)};
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Modulus& m = moduli[trial % moduli.size()];
    const std::size_t n = 1 + rng() % 6;
    const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, n, rng));
    REQUIRE(c.average_lee_weight() == brute_mean(c));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("socle") {
  CHECK(code(3, 2, {{1, 2}}).socle() == code(3, 2, {{3, 6}}));
  const auto h = code(2, 2, {{2, 2}});
  CHECK(h.socle() == h);
  CHECK(LinearCode::ambient(Modulus(2, 2), 2).socle() == code(2, 2, {{2, 0}, {0, 2}}));
}

TEST_CASE("socle has p^K words and lies in <p^(s-1)>") {
  std::mt19937_64 rng(23);
  for (const Modulus& m : {Modulus(2, 3), Modulus(3, 2), Modulus(5, 2)})
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, n, rng));
      const auto soc = c.socle();
      BigInt expect = 1;
      for (int i = 0; i < c.rank(); ++i) expect *= m.p();
      REQUIRE(soc.cardinality() == expect);
      std::set<oracle::Word> brute;
      for (const auto& w : oracle::words_of(c))
        if (std::all_of(w.begin(), w.end(), [&](auto a) { return a % m.power(m.s() - 1) == 0; })) brute.insert(w);
      REQUIRE(oracle::words_of(soc) == brute);
    }
}

TEST_CASE("Lee-equidistance") {
  const auto e = code(5, 1, {{1, 2, 1, 3}});
  CHECK(e.lee_equidistant_weight() == 6);
  CHECK(code(5, 1, {{1, 2}}).lee_equidistant_weight() == 3);
  CHECK_FALSE(code(5, 1, {{1, 0}}).is_lee_equidistant());
}

TEST_CASE("replication") {
  const auto c = code(5, 1, {{1, 2}});
  CHECK(c.replicate(2) == code(5, 1, {{1, 2, 1, 2}}));
  CHECK(c.replicate(2).lee_equidistant_weight() == 6);
  CHECK(c.replicate(1) == c);
  CHECK(code(2, 2, {{2, 2}}).replicate(3).min_lee_distance() == 12);
  CHECK_THROWS_AS(c.replicate(0), InputError);
}

TEST_CASE("distance invariants on every small code") {
  for (const Modulus& m : {Modulus(2, 2), Modulus(5, 1), Modulus(2, 3), Modulus(3, 2)})
    for (int n = 1; n <= 3; ++n)
      for_each_small_code(m, n, [&](const LinearCode& c) {
        const auto words = oracle::words_of(c);
        REQUIRE(c.min_lee_distance() == oracle::min_lee(m, words));
        REQUIRE(c.min_hamming_distance() == oracle::min_hamming(words));
        REQUIRE(c.min_hamming_distance() <= c.min_lee_distance());
        REQUIRE(c.min_lee_distance() <= m.max_weight() * c.min_hamming_distance());
        if (auto w = c.lee_equidistant_weight()) {
          // equality case of the Plotkin inequality
          const Rational lhs = Rational(*w) * (c.cardinality() - 1);
          REQUIRE(lhs == c.average_lee_weight() * c.cardinality());
        }
      });
}

TEST_CASE("containment") {
  const auto c = code(3, 2, {{1, 2, 0}, {0, 3, 3}});
  const std::vector<std::int64_t> in{2, 7, 3};  // 2*(1,2,0) + (0,3,3)
  const std::vector<std::int64_t> out{0, 1, 1};
  CHECK(c.contains(in));
  CHECK_FALSE(c.contains(out));
  CHECK(c.socle().is_subcode_of(c));
  CHECK_FALSE(c.is_subcode_of(c.socle()));
}

TEST_CASE("text format") {
  std::istringstream in("# comment\n5 1 4\n1 2 1 3   # trailing\n\n");
  const auto g = read_code_matrix(in);
  CHECK(g.to_rows() == Rows{{1, 2, 1, 3}});

  std::ostringstream out;
  write_code_matrix(out, g);
  std::istringstream back(out.str());
  CHECK(read_code_matrix(back) == g);

  auto bad = [](const std::string& text) {
    std::istringstream s(text);
    return read_code_matrix(s);
  };
  CHECK_THROWS_WITH_AS(bad("5 1 2\n1 7\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(bad("5 1 2\n1 2 3\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(bad("5 1\n"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(bad("6 1 2\n1 1\n"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_WITH_AS(bad("5 1 2\n1 x\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_AS(bad(""), InputError);
  CHECK(LinearCode::from_generator(bad("3 2 3\n")).is_trivial());
}

TEST_CASE("written codes re-parse to the same code") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Modulus m(3, 2);
    const auto c = LinearCode::from_generator(oracle::random_matrix(m, 1 + rng() % 3, 1 + rng() % 5, rng));
    std::stringstream io;
    write_code_matrix(io, c.generator());
    REQUIRE(LinearCode::from_generator(read_code_matrix(io)) == c);
  }
}

TEST_CASE("distance profile is safe under concurrent first use") {
  const auto c = LinearCode::ambient(Modulus(3, 2), 5);
  std::vector<std::int64_t> seen(8, -1);
  parallel_units(8, 8, [&](std::size_t u) { seen[u] = c.min_lee_distance(); });
  for (auto d : seen) CHECK(d == 1);
}
