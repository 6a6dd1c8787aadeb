#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "leecodes/bounds.hpp"
#include "leecodes/linear_code.hpp"

namespace leecodes {

inline constexpr std::uint64_t kDefaultCensusBudget = 100'000'000;

enum class Strategy {
  // Every filling of the block-triangular systematic shape, for every placement
  // of the pivot columns (one column set per block). Codes repeat across placements.
  systematic,
  // Pivots first, back-reduced pivot entries, remaining columns as a sorted
  // multiset of columns up to sign. Covers every code up to signed permutation.
  reduced,
};

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct SearchSpace {
  Modulus modulus;
  int n = 0;
  Subtype subtype;
  Strategy strategy = Strategy::systematic;

  SearchSpace(Modulus m, int n, Subtype subtype, Strategy strategy = Strategy::systematic);

  int rank() const;
  /// Number of candidate generator matrices the strategy visits.
  BigInt candidate_count() const;
  std::string describe() const;
};

/// All subtypes (k_1, ..., k_s) with 1 <= rank <= n.
std::vector<Subtype> all_subtypes(const Modulus& m, int n);

/// Independent slices of the enumeration, in a fixed order.
std::size_t work_units(const SearchSpace& space);
void enumerate_unit(const SearchSpace& space, std::size_t unit, const std::function<void(const LinearCode&)>& visit);

/// Throws BudgetError when the candidate count exceeds the budget.
void check_search_budget(const SearchSpace& space, std::uint64_t budget);
void enumerate_codes(const SearchSpace& space, const std::function<void(const LinearCode&)>& visit,
                     std::uint64_t budget = kDefaultCensusBudget);

/// Runs body(unit) for unit in [0, units) on up to `threads` workers (0 = hardware).
void parallel_units(std::size_t units, unsigned threads, const std::function<void(std::size_t)>& body);

struct CensusOptions {
  std::uint64_t budget = kDefaultCensusBudget;
  unsigned threads = 0;
  bool keep_optimal = true;
};

struct CensusResult {
  static constexpr int kFormatVersion = 1;

  SearchSpace space;
  std::int64_t max_d_lee = 0;  // 0 when nothing was enumerated
  std::vector<LinearCode> optimal_codes;  // one per signed-permutation class
  std::uint64_t candidates = 0;
  std::uint64_t optimal_candidates = 0;
  std::map<std::int64_t, std::uint64_t> distance_histogram;
  std::map<std::string, std::uint64_t> attaining;  // candidates meeting each applicable bound
  std::uint64_t bound_violations = 0;

  explicit CensusResult(SearchSpace sp) : space(std::move(sp)) {}

  /// Order-independent combination: max of distances, sums of counts, union of optimal sets.
  void merge(const CensusResult& other);
  std::string to_json(int indent = 2) const;
};

CensusResult max_lee_distance_census(const SearchSpace& space, const CensusOptions& options = {});

std::vector<LinearCode> find_attaining_codes(const SearchSpace& space, const std::string& bound_id,
                                             const CensusOptions& options = {});

/// The socle, read as a K-dimensional code over F_p, meets the Hamming Singleton bound.
bool verify_mds_socle(const LinearCode& c);

// ---------------------------------------------------------------------------
// Characterization checks

struct CharacterizationRange {
  std::vector<Modulus> moduli;
  int n_max = 4;
  // Every rule is invariant under signed permutations, so class representatives suffice.
  Strategy strategy = Strategy::reduced;
  CensusOptions options;
};

struct ModulusCharacterization {
  Modulus modulus;
  std::uint64_t candidates = 0;
  std::uint64_t attaining = 0;
  std::uint64_t missing = 0;  // predicted to attain but do not
  std::uint64_t extra = 0;    // attain but fall outside the prediction
  std::vector<LinearCode> missing_examples;
  std::vector<LinearCode> extra_examples;

  std::string verdict() const;
};

struct CharacterizationReport {
  std::string id;
  std::string description;
  bool necessary_only = false;  // only EXTRA is meaningful
  std::vector<ModulusCharacterization> per_modulus;

  std::string verdict() const;
  std::string to_json(int indent = 2) const;
};

/// Known ids: shiromoto, z4_singleton, alderson_huntemann, shiromoto_rank, new_rank, rank2_equidistant.
const std::vector<std::string>& characterization_ids();
CharacterizationRange default_range(const std::string& id);
CharacterizationReport check_characterization(const std::string& id, const CharacterizationRange& range);

}  // namespace leecodes
