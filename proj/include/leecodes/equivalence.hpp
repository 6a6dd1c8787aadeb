#pragma once

#include <vector>

#include "leecodes/linear_code.hpp"

namespace leecodes {

/// True iff some coordinate permutation combined with sign flips maps a onto b.
/// Searches for images of the reduced generator rows of `a` among the codewords
/// of `b`, so |b| must be within the enumeration budget.
bool signed_permutation_equivalent(const LinearCode& a, const LinearCode& b,
                                   std::uint64_t budget = kDefaultCodewordBudget);

/// Cheap invariants that equivalent codes share (subtype, support subtype,
/// sorted Lee weight distribution). Codes with different keys are inequivalent.
std::vector<std::int64_t> equivalence_invariant(const LinearCode& c);

/// One representative per equivalence class, in first-seen order.
std::vector<LinearCode> dedupe_equivalent(const std::vector<LinearCode>& codes);

/// Exact identity key: modulus, length and reduced generator entries.
std::vector<std::int64_t> generator_key(const LinearCode& c);

}  // namespace leecodes
