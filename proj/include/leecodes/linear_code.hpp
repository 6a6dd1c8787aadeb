#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "leecodes/ring.hpp"

namespace leecodes {

/// Default cap on |C| for codeword enumeration.
inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 24;

/// Trivial code asked for a minimum distance.
class UndefinedDistanceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Row-major integer matrix over Z/p^s Z (generator or parity-check matrix).
class CodeMatrix {
 public:
  /// Entries are reduced mod q; rows * cols must equal entries.size().
  CodeMatrix(Modulus m, std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  CodeMatrix(Modulus m, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);
  static CodeMatrix from_rows(Modulus m, const std::vector<std::vector<std::int64_t>>& rows);

  const Modulus& modulus() const { return m_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const CodeMatrix& a, const CodeMatrix& b) {
    return a.m_ == b.m_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  Modulus m_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> e_;
};

/// (k_1, ..., k_s): k_i generators of additive order p^{s-i+1}.
using Subtype = std::vector<int>;

/// (n_0, ..., n_s): n_i coordinates whose projection generates <p^i>.
struct SupportSubtype {
  std::vector<int> counts;

  bool non_degenerate() const { return counts.empty() || counts.back() == 0; }
  int total() const;
  friend bool operator==(const SupportSubtype&, const SupportSubtype&) = default;
};

/// Generator in block-upper-triangular shape, with identity blocks p^{i-1} Id_{k_i}
/// on the diagonal, after the column permutation is applied. Column j of
/// `generator` is column `permutation[j]` of the code.
struct SystematicForm {
  CodeMatrix generator;
  std::vector<std::size_t> permutation;
};

/// Summary of one pass over the codewords.
struct DistanceProfile {
  std::int64_t min_lee = 0;
  std::int64_t min_hamming = 0;
  std::int64_t max_lee = 0;
  BigInt total_lee = 0;
  bool lee_equidistant = false;
};

/// A linear code over Z/p^s Z. Immutable; copies share state.
class LinearCode {
 public:
  /// Row span of G. Redundant rows are allowed and removed by reduction.
  static LinearCode from_generator(const CodeMatrix& G);
  /// As above, additionally checking that G has n columns.
  static LinearCode from_generator(const CodeMatrix& G, std::size_t n);
  static LinearCode zero(const Modulus& m, std::size_t n);
  static LinearCode ambient(const Modulus& m, std::size_t n);

  const Modulus& modulus() const;
  std::size_t length() const;
  /// Reduced generator (one row per pivot) in the code's own coordinates.
  const CodeMatrix& generator() const;
  /// Additive-order exponents of the reduced generator rows: row r has order p^{s - valuation}.
  std::span<const int> pivot_valuations() const;
  /// Pivot column of each reduced generator row.
  std::span<const std::size_t> pivot_columns() const;

  const Subtype& subtype() const;
  /// Type k = log_{p^s} |C|, an exact rational with denominator dividing s.
  Rational type() const;
  int rank() const;
  int free_rank() const;
  bool is_free() const { return free_rank() == rank(); }
  bool is_trivial() const { return rank() == 0; }
  /// log_p |C|.
  int log_p_cardinality() const;
  BigInt cardinality() const;
  /// |C| when it fits in 64 bits.
  std::optional<std::uint64_t> small_cardinality() const;

  const SupportSubtype& support_subtype() const;

  SystematicForm systematic_form() const;
  /// Generator matrix of the dual code, systematic in the dual's own reduction.
  CodeMatrix parity_check() const;
  LinearCode dual() const;
  LinearCode socle() const;
  /// ell-fold replication: (G | G | ... | G).
  LinearCode replicate(int ell) const;

  bool contains(std::span<const std::int64_t> v) const;
  bool is_subcode_of(const LinearCode& other) const;
  friend bool operator==(const LinearCode& a, const LinearCode& b);

  /// Visits every codeword once in mixed-radix order over the reduced rows
  /// (row r swept over p^{s - valuation_r} coefficients, last row fastest).
  void for_each_codeword(const std::function<void(std::span<const std::int64_t>)>& visit,
                         std::uint64_t budget = kDefaultCodewordBudget) const;
  std::vector<RingVector> codewords(std::uint64_t budget = kDefaultCodewordBudget) const;

  /// Computed once on first use; safe under concurrent readers.
  const DistanceProfile& distance_profile() const;
  std::int64_t min_lee_distance() const;
  std::int64_t min_hamming_distance() const;
  /// Common Lee weight when every non-zero codeword has the same Lee weight.
  std::optional<std::int64_t> lee_equidistant_weight() const;
  bool is_lee_equidistant() const { return lee_equidistant_weight().has_value(); }

  /// Closed form from the support subtype.
  Rational average_lee_weight() const;

 private:
  struct Impl;
  explicit LinearCode(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

void check_codeword_budget(const LinearCode& c, std::uint64_t budget);

/// Text format: first line "p s n", then one generator row per line; '#' starts a comment line.
CodeMatrix read_code_matrix(std::istream& in);
CodeMatrix read_code_file(const std::string& path);
void write_code_matrix(std::ostream& out, const CodeMatrix& g);

}  // namespace leecodes
