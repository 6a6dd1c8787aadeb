#pragma once

#include <string>
#include <vector>

#include "leecodes/linear_code.hpp"

namespace leecodes {

struct NamedCode {
  std::string name;
  LinearCode code;
};

/// Known codes meeting a Singleton-like Lee bound at length n.
std::vector<NamedCode> catalog_mld(const Modulus& m, int n);

/// Shortest cyclic Lee-equidistant codes already known for the field case and
/// for p = 2: <(1, ..., (p-1)/2)> when s = 1 and p is odd, <(1, ..., 2^s - 1)> when p = 2.
LinearCode known_equidistant(const Modulus& m);

struct EquidistantSpec {
  Modulus modulus;
  int level = 1;  // i: the non-zero k_i of the first generator
  int rank = 1;

  /// p^{2s-i} (p^2 - 1) / 8, or (p^2 - 1) / 8 for the one-copy code when s = 1.
  std::int64_t predicted_weight() const;
};

/// Sign-class representatives in [1, M] of <p^l> \ <p^{l+1}>, ascending.
std::vector<std::int64_t> layer_representatives(const Modulus& m, int l);

/// Cyclic Lee-equidistant code with k_i = 1. For s = 1 this is the shorter
/// <(1, ..., (p-1)/2)>; otherwise p copies of layer i-1 and p-1 copies of
/// each deeper layer. Requires p odd.
LinearCode equidistant_rank1(const EquidistantSpec& spec);
/// The same generator without the s = 1 shortcut.
std::vector<std::int64_t> equidistant_rank1_generator(const EquidistantSpec& spec);

/// Two-generator Lee-equidistant code with k_i = 1 and k_s = 1. Requires p odd, s >= 2.
LinearCode equidistant_rank2(const EquidistantSpec& spec);
/// The two constructed rows, in construction column order.
CodeMatrix equidistant_rank2_generator(const EquidistantSpec& spec);

struct PredictedSubtypes {
  SupportSubtype code;
  // For rank 2: the cyclic subcodes generated by each row.
  std::optional<SupportSubtype> first;
  std::optional<SupportSubtype> second;
  int length = 0;
};

PredictedSubtypes predict_support_subtype(const EquidistantSpec& spec);

}  // namespace leecodes
