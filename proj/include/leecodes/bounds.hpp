#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "leecodes/linear_code.hpp"

namespace leecodes {

/// Parameters the bounds depend on. `ell` is an optional level in [1, s].
struct CodeParams {
  Modulus modulus;
  int n = 0;
  Rational k;
  int ceil_k = 0;
  int K = 0;
  int k1 = 0;
  std::optional<int> ell;

  static CodeParams from_subtype(const Modulus& m, int n, const Subtype& subtype);
  static CodeParams of(const LinearCode& c);

  bool is_free() const { return k1 == K; }
  /// |C| = p^{s k}.
  BigInt cardinality() const;
};

// Hamming-metric bounds (used for d_H, not d_L).
int singleton_hamming(const CodeParams& c);
int singleton_rank(const CodeParams& c);

// Lee-metric bounds. Integer results are the largest d_L the bound allows.
int z4_singleton(const CodeParams& c);
int shiromoto_max_d(const CodeParams& c);
int shiromoto_rank_max_d(const CodeParams& c);
int lee_mdr(const CodeParams& c);
/// nullopt when k is not an integer with 1 < k < n.
std::optional<int> alderson_huntemann(const CodeParams& c);
Rational wyner_graham(const CodeParams& c);
/// nullopt unless the code is free with k >= 2.
std::optional<Rational> chiang_wolf(const CodeParams& c);
/// Coefficient of the Plotkin-type bounds for the full ring: (q+1)/4, or 2^{2s-2}/(2^s-1) for p = 2.
Rational chiang_wolf_coefficient(const Modulus& m);
/// nullopt when k1 = 0.
std::optional<Rational> chiang_wolf_k1(const CodeParams& c);

Rational coefficient_A(const Modulus& m, int i);
Rational subcode_plotkin(const LinearCode& c, const LinearCode& sub);
Rational hamming_to_lee(const Modulus& m, int ell, std::int64_t d_h);

struct RankBound {
  std::int64_t stated;   // floor(A) * (n - K + 1)
  std::int64_t plotted;  // floor(A * (n - K + 1))
};
RankBound new_rank_bound(const CodeParams& c);
/// Uses c.ell (required).
RankBound new_rank_bound_level(const CodeParams& c);

/// Levels ell admitting a witness y of minimum Hamming weight whose non-zero
/// multiples keep its support and whose additive order is exactly p^ell.
std::set<int> applicable_levels(const LinearCode& c);

/// One row of a BoundReport.
struct BoundEntry {
  std::string id;
  std::string label;
  bool applicable = false;
  Rational value;            // exact bound value (max-d form for floor-style bounds)
  std::int64_t integer = 0;  // largest admissible d_L
  std::optional<std::int64_t> stated;  // printed floor-of-coefficient variant, when it differs in kind
  // Floor-style bounds read floor((d - 1) / divisor) <= rhs; attainment is equality there.
  std::optional<Rational> floor_divisor;
  std::int64_t floor_rhs = 0;
  std::optional<bool> attained;

  bool attained_by(std::int64_t d) const;
};

struct BoundReport {
  CodeParams params;
  std::optional<std::int64_t> d_lee;  // present when evaluated on a concrete code
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& id) const;
  /// Applicable entries whose integer form d_L exceeds (soundness check).
  std::vector<std::string> violations(std::int64_t d) const;
};

/// Bound identifiers in report order.
const std::vector<std::string>& bound_ids();

BoundReport evaluate_bounds(const CodeParams& c);
/// Adds attainment flags and, when a level above 1 applies, the level-specific rank bound.
BoundReport evaluate_bounds(const LinearCode& c);

/// Throws InputError for an unknown or inapplicable bound.
bool attainment_check(const LinearCode& c, const std::string& bound_id);

}  // namespace leecodes
