#include "leecodes/equivalence.hpp"

#include <algorithm>
#include <map>

namespace leecodes {

namespace {

using Column = std::vector<std::int64_t>;

std::vector<std::int64_t> sign_signature(const Modulus& m, std::span<const std::int64_t> v) {
  std::vector<std::int64_t> sig;
  sig.reserve(v.size());
  for (auto x : v) sig.push_back(m.sign_class(x));
  std::sort(sig.begin(), sig.end());
  return sig;
}

int vector_order(const Modulus& m, std::span<const std::int64_t> v) {
  int o = 0;
  for (auto x : v) o = std::max(o, m.order_exponent(x));
  return o;
}

// Column up to sign: the lexicographically smaller of c and -c.
Column canonical_column(const Modulus& m, const Column& c) {
  Column neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = m.neg(c[i]);
  return std::min(c, neg);
}

std::vector<Column> column_profile(const Modulus& m, const std::vector<Column>& cols) {
  std::vector<Column> out;
  out.reserve(cols.size());
  for (const auto& c : cols) out.push_back(canonical_column(m, c));
  std::sort(out.begin(), out.end());
  return out;
}

struct Matcher {
  const Modulus& m;
  std::size_t n;
  std::vector<std::vector<std::vector<std::int64_t>>> candidates;  // per row of a
  std::vector<std::vector<Column>> target_profiles;                  // a's columns truncated to depth t+1
  std::vector<Column> image_cols;

  bool search(std::size_t t) {
    if (t == candidates.size()) return true;
    for (const auto& c : candidates[t]) {
      for (std::size_t j = 0; j < n; ++j) image_cols[j].push_back(c[j]);
      const bool ok = column_profile(m, image_cols) == target_profiles[t] && search(t + 1);
      for (std::size_t j = 0; j < n; ++j) image_cols[j].pop_back();
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<std::int64_t> generator_key(const LinearCode& c) {
  const auto& g = c.generator();
  std::vector<std::int64_t> key{c.modulus().p(), c.modulus().s(), static_cast<std::int64_t>(c.length()),
                                static_cast<std::int64_t>(g.rows())};
  for (std::size_t r = 0; r < g.rows(); ++r) key.insert(key.end(), g.row(r).begin(), g.row(r).end());
  return key;
}

std::vector<std::int64_t> equivalence_invariant(const LinearCode& c) {
  std::vector<std::int64_t> key{c.modulus().p(), c.modulus().s(), static_cast<std::int64_t>(c.length())};
  for (int k : c.subtype()) key.push_back(k);
  for (int n : c.support_subtype().counts) key.push_back(n);
  std::map<std::int64_t, std::int64_t> dist;
  c.for_each_codeword([&](std::span<const std::int64_t> w) { ++dist[lee_weight(c.modulus(), w)]; });
  for (auto [w, count] : dist) {
    key.push_back(w);
    key.push_back(count);
  }
  return key;
}

bool signed_permutation_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t budget) {
  if (!(a.modulus() == b.modulus()) || a.length() != b.length() || a.subtype() != b.subtype() ||
      a.support_subtype() != b.support_subtype())
    return false;
  if (a.is_trivial()) return true;
  check_codeword_budget(b, budget);

  const auto& m = a.modulus();
  const std::size_t n = a.length();
  const auto& g = a.generator();
  const std::size_t K = g.rows();

  Matcher matcher{m, n, std::vector<std::vector<std::vector<std::int64_t>>>(K), {}, std::vector<Column>(n)};
  std::vector<std::pair<int, std::vector<std::int64_t>>> row_keys;
  for (std::size_t t = 0; t < K; ++t) row_keys.emplace_back(vector_order(m, g.row(t)), sign_signature(m, g.row(t)));

  b.for_each_codeword(
      [&](std::span<const std::int64_t> w) {
        const int o = vector_order(m, w);
        std::vector<std::int64_t> sig;
        for (std::size_t t = 0; t < K; ++t) {
          if (row_keys[t].first != o) continue;
          if (sig.empty()) sig = sign_signature(m, w);
          if (sig == row_keys[t].second) matcher.candidates[t].emplace_back(w.begin(), w.end());
        }
      },
      budget);

  std::vector<Column> cols(n);
  for (std::size_t t = 0; t < K; ++t) {
    if (matcher.candidates[t].empty()) return false;
    for (std::size_t j = 0; j < n; ++j) cols[j].push_back(g.at(t, j));
    matcher.target_profiles.push_back(column_profile(m, cols));
  }
  return matcher.search(0);
}

std::vector<LinearCode> dedupe_equivalent(const std::vector<LinearCode>& codes) {
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets;
  std::vector<LinearCode> reps;
  for (const auto& c : codes) {
    auto& bucket = buckets[equivalence_invariant(c)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t r) { return signed_permutation_equivalent(reps[r], c); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(c);
    }
  }
  return reps;
}

}  // namespace leecodes
