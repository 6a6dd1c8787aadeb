#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leecodes/bounds.hpp"
#include "leecodes/search.hpp"

namespace leecodes {

// ---------------------------------------------------------------------------
// Bound curves for codes of type (k1, k2, 0, ..., 0) and length 2K.

struct FigureSpec {
  int id = 0;
  Modulus modulus;
  int k1 = 0;
  int k2_max = 15;

  CodeParams params(int k2) const;
};

/// Figures 1..3: (Z/3^5, k1 = 10), (Z/5^2, k1 = 15), (Z/5^5, k1 = 10).
const std::vector<FigureSpec>& figure_specs();
const FigureSpec& figure_spec(int id);
/// Curve ids in output order.
const std::vector<std::string>& figure_curve_ids();

/// Plotted conventions: Chiang-Wolf in the k1 form, the rank bound as
/// floor(A (n - K + 1)), Wyner-Graham floored, Shiromoto as M (n - K + 1),
/// Alderson-Huntemann as floor(M (n - k)).
std::int64_t figure_value(const FigureSpec& f, int k2, const std::string& curve);

/// CSV with header `k2,bound_id,value`, rows ordered by k2 then curve.
std::string figure_csv(int id);

struct ReferenceComparison {
  int compared = 0;
  std::vector<std::string> mismatches;  // human-readable cell descriptions
};

/// Compares every curve point against the embedded reference coordinates.
ReferenceComparison compare_figure(int id);

// ---------------------------------------------------------------------------
// Z/4 comparison table

const std::vector<std::string>& table1_columns();

struct Table1Cell {
  std::string column;
  std::optional<std::int64_t> reference;
  std::optional<std::int64_t> computed;
  bool documented = false;  // listed as a known ambiguous cell
  std::string note;

  bool matches() const { return reference == computed; }
};

struct Table1Row {
  int row = 0;
  CodeParams params;
  Subtype subtype;
  std::vector<Table1Cell> cells;
  std::uint64_t bound_violations = 0;  // census codes exceeding an applicable bound
};

struct Table1Report {
  std::vector<Table1Row> rows;

  /// Mismatching cells not listed as documented.
  std::vector<std::string> undocumented_mismatches() const;
  /// Documented cells that in fact match.
  std::vector<std::string> unused_documentation() const;
  /// The mismatch set equals the documented set.
  bool matches_documentation() const;
  std::uint64_t bound_violations() const;

  std::string csv() const;
  std::string mismatch_report() const;
};

/// Bound columns of the table for the given parameters ("-" cells are nullopt).
std::optional<std::int64_t> table1_bound(const CodeParams& c, const std::string& column);

/// Recomputes every row: maximal d_L by exhaustive census, bound columns from the formulas.
Table1Report reproduce_table1(const CensusOptions& options = {});

}  // namespace leecodes
