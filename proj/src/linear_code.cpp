#include "leecodes/linear_code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace leecodes {

// ---------------------------------------------------------------------------
// CodeMatrix

CodeMatrix::CodeMatrix(Modulus m, std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : m_(std::move(m)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw InputError("code matrix: entry count does not match rows * cols");
  for (auto& x : e_) x = m_.reduce(x);
}

CodeMatrix::CodeMatrix(Modulus m, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols)
    : m_(std::move(m)), rows_(rows.size()), cols_(cols) {
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("code matrix: row length " + std::to_string(r.size()) +
                                            " differs from " + std::to_string(cols_) + " columns");
    for (auto x : r) e_.push_back(m_.reduce(x));
  }
}

CodeMatrix CodeMatrix::from_rows(Modulus m, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw InputError("code matrix: from_rows needs at least one row to infer the length");
  return CodeMatrix(std::move(m), rows, rows.front().size());
}

std::vector<std::vector<std::int64_t>> CodeMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

int SupportSubtype::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

// ---------------------------------------------------------------------------
// Reduction

namespace {

using Row = std::vector<std::int64_t>;

struct Reduced {
  std::vector<Row> rows;
  std::vector<int> valuations;
  std::vector<std::size_t> pivots;
};

void axpy(const Modulus& m, Row& target, std::int64_t factor, const Row& source) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = m.sub(target[j], m.mul(factor, source[j]));
}

// Gaussian elimination over Z/p^s: the pivot is the entry of least p-adic
// valuation, leftmost column first, lowest row index among equals. Rows below
// are cleared in the pivot column; rows above are reduced mod the pivot.
Reduced reduce_rows(const Modulus& m, std::size_t n, std::vector<Row> work) {
  Reduced out;
  std::vector<bool> pivoted(n, false);
  while (!work.empty()) {
    int best_val = m.s();
    std::size_t best_col = n;
    for (std::size_t c = 0; c < n && best_val > 0; ++c) {
      if (pivoted[c]) continue;
      for (const auto& r : work) {
        int v = m.valuation(r[c]);
        if (v < best_val) {
          best_val = v;
          best_col = c;
        }
      }
    }
    if (best_col == n) break;
    auto it = std::find_if(work.begin(), work.end(),
                           [&](const Row& r) { return m.valuation(r[best_col]) == best_val; });
    Row pivot = std::move(*it);
    work.erase(it);

    const std::int64_t scale = m.power(best_val);
    const std::int64_t inv = m.inverse(pivot[best_col] / scale);
    for (auto& x : pivot) x = m.mul(x, inv);

    for (auto& r : work) axpy(m, r, r[best_col] / scale, pivot);
    for (auto& r : out.rows) axpy(m, r, r[best_col] / scale, pivot);

    pivoted[best_col] = true;
    out.rows.push_back(std::move(pivot));
    out.valuations.push_back(best_val);
    out.pivots.push_back(best_col);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearCode

struct LinearCode::Impl {
  Modulus m;
  std::size_t n;
  CodeMatrix gen;
  std::vector<int> valuations;
  std::vector<std::size_t> pivots;
  Subtype subtype;
  SupportSubtype support;

  mutable std::once_flag profile_once;
  mutable DistanceProfile profile;

  Impl(Modulus mod, std::size_t len, Reduced r)
      : m(mod), n(len), gen(mod, r.rows, len), valuations(std::move(r.valuations)), pivots(std::move(r.pivots)) {
    subtype.assign(static_cast<std::size_t>(m.s()), 0);
    for (int v : valuations) ++subtype[static_cast<std::size_t>(v)];
    support.counts.assign(static_cast<std::size_t>(m.s()) + 1, 0);
    for (std::size_t c = 0; c < n; ++c) {
      int v = m.s();
      for (std::size_t r = 0; r < gen.rows(); ++r) v = std::min(v, m.valuation(gen.at(r, c)));
      ++support.counts[static_cast<std::size_t>(v)];
    }
  }
};

LinearCode LinearCode::from_generator(const CodeMatrix& G) {
  std::vector<Row> rows = G.to_rows();
  return LinearCode(std::make_shared<const Impl>(G.modulus(), G.cols(), reduce_rows(G.modulus(), G.cols(), rows)));
}

LinearCode LinearCode::from_generator(const CodeMatrix& G, std::size_t n) {
  if (G.cols() != n)
    throw InputError("generator has " + std::to_string(G.cols()) + " columns, expected length " + std::to_string(n));
  return from_generator(G);
}

LinearCode LinearCode::zero(const Modulus& m, std::size_t n) { return from_generator(CodeMatrix(m, 0, n, {})); }

LinearCode LinearCode::ambient(const Modulus& m, std::size_t n) {
  std::vector<std::int64_t> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  return from_generator(CodeMatrix(m, n, n, std::move(id)));
}

const Modulus& LinearCode::modulus() const { return impl_->m; }
std::size_t LinearCode::length() const { return impl_->n; }
const CodeMatrix& LinearCode::generator() const { return impl_->gen; }
std::span<const int> LinearCode::pivot_valuations() const { return impl_->valuations; }
std::span<const std::size_t> LinearCode::pivot_columns() const { return impl_->pivots; }
const Subtype& LinearCode::subtype() const { return impl_->subtype; }
const SupportSubtype& LinearCode::support_subtype() const { return impl_->support; }

Rational LinearCode::type() const {
  Rational k(log_p_cardinality(), modulus().s());
  k.canonicalize();
  return k;
}

int LinearCode::rank() const { return static_cast<int>(impl_->valuations.size()); }
int LinearCode::free_rank() const { return impl_->subtype.empty() ? 0 : impl_->subtype.front(); }

int LinearCode::log_p_cardinality() const {
  int total = 0;
  for (int v : impl_->valuations) total += modulus().s() - v;
  return total;
}

BigInt LinearCode::cardinality() const {
  return big_pow(modulus().p(), static_cast<unsigned long>(log_p_cardinality()));
}

std::optional<std::uint64_t> LinearCode::small_cardinality() const {
  BigInt c = cardinality();
  if (c > BigInt(std::to_string(UINT64_MAX))) return std::nullopt;
  return std::stoull(c.get_str());
}

SystematicForm LinearCode::systematic_form() const {
  const auto& m = modulus();
  const std::size_t n = length();
  std::vector<std::size_t> perm(impl_->pivots.begin(), impl_->pivots.end());
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(impl_->pivots.begin(), impl_->pivots.end(), c) == impl_->pivots.end()) perm.push_back(c);
  std::vector<std::int64_t> entries;
  entries.reserve(impl_->gen.rows() * n);
  for (std::size_t r = 0; r < impl_->gen.rows(); ++r)
    for (auto c : perm) entries.push_back(impl_->gen.at(r, c));
  return {CodeMatrix(m, impl_->gen.rows(), n, std::move(entries)), std::move(perm)};
}

LinearCode LinearCode::dual() const {
  const auto& m = modulus();
  const std::size_t n = length();
  const std::size_t K = impl_->pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : impl_->pivots) is_pivot[c] = true;

  // Row t equals p^{v_t} * r_t, so x is orthogonal to it iff <r_t, x> = 0 mod p^{s - v_t}.
  // Solve for pivot coordinates by back substitution from the last row.
  auto back_substitute = [&](Row& x, std::size_t skip_row) {
    for (std::size_t t = K; t-- > 0;) {
      if (t == skip_row) continue;
      const std::int64_t scale = m.power(impl_->valuations[t]);
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == impl_->pivots[t]) continue;
        acc = m.add(acc, m.mul(impl_->gen.at(t, j) / scale, x[j]));
      }
      x[impl_->pivots[t]] = m.neg(acc);
    }
  };

  std::vector<Row> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row x(n, 0);
    x[f] = 1;
    back_substitute(x, K);
    gens.push_back(std::move(x));
  }
  for (std::size_t t = 0; t < K; ++t) {
    const int v = impl_->valuations[t];
    if (v == 0) continue;
    Row x(n, 0);
    x[impl_->pivots[t]] = m.power(m.s() - v);
    // only rows above t see the new coordinate; rows below have zero there
    for (std::size_t u = t; u-- > 0;) {
      const std::int64_t scale = m.power(impl_->valuations[u]);
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == impl_->pivots[u]) continue;
        acc = m.add(acc, m.mul(impl_->gen.at(u, j) / scale, x[j]));
      }
      x[impl_->pivots[u]] = m.neg(acc);
    }
    gens.push_back(std::move(x));
  }
  return from_generator(CodeMatrix(m, gens, n));
}

CodeMatrix LinearCode::parity_check() const { return dual().generator(); }

LinearCode LinearCode::socle() const {
  const auto& m = modulus();
  std::vector<Row> gens;
  for (std::size_t t = 0; t < impl_->gen.rows(); ++t) {
    const std::int64_t f = m.power(m.s() - 1 - impl_->valuations[t]);
    Row r(impl_->gen.row(t).begin(), impl_->gen.row(t).end());
    for (auto& x : r) x = m.mul(x, f);
    gens.push_back(std::move(r));
  }
  return from_generator(CodeMatrix(m, gens, length()));
}

LinearCode LinearCode::replicate(int ell) const {
  if (ell < 1) throw InputError("replicate: ell must be positive");
  std::vector<Row> gens;
  for (std::size_t t = 0; t < impl_->gen.rows(); ++t) {
    Row r;
    for (int e = 0; e < ell; ++e) r.insert(r.end(), impl_->gen.row(t).begin(), impl_->gen.row(t).end());
    gens.push_back(std::move(r));
  }
  return from_generator(CodeMatrix(modulus(), gens, length() * static_cast<std::size_t>(ell)));
}

bool LinearCode::contains(std::span<const std::int64_t> v) const {
  if (v.size() != length()) return false;
  const auto& m = modulus();
  Row x(v.begin(), v.end());
  for (auto& e : x) e = m.reduce(e);
  for (std::size_t t = 0; t < impl_->pivots.size(); ++t) {
    const std::int64_t scale = m.power(impl_->valuations[t]);
    const std::int64_t e = x[impl_->pivots[t]];
    if (e % scale != 0) return false;
    const std::int64_t f = e / scale;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = m.sub(x[j], m.mul(f, impl_->gen.at(t, j)));
  }
  return std::all_of(x.begin(), x.end(), [](std::int64_t e) { return e == 0; });
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
  if (!(modulus() == other.modulus()) || length() != other.length()) return false;
  for (std::size_t t = 0; t < impl_->gen.rows(); ++t)
    if (!other.contains(impl_->gen.row(t))) return false;
  return true;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.log_p_cardinality() == b.log_p_cardinality() && a.is_subcode_of(b);
}

void check_codeword_budget(const LinearCode& c, std::uint64_t budget) {
  const BigInt size = c.cardinality();
  if (size > BigInt(std::to_string(budget))) {
    throw BudgetError("code has " + size.get_str() + " codewords, enumeration budget is " + std::to_string(budget),
                      size.fits_ulong_p() ? size.get_ui() : UINT64_MAX, budget);
  }
}

void LinearCode::for_each_codeword(const std::function<void(std::span<const std::int64_t>)>& visit,
                                   std::uint64_t budget) const {
  check_codeword_budget(*this, budget);
  const auto& m = modulus();
  const std::size_t K = impl_->pivots.size();
  const std::size_t n = length();
  std::vector<std::int64_t> radix(K), digit(K, 0);
  for (std::size_t t = 0; t < K; ++t) radix[t] = m.power(m.s() - impl_->valuations[t]);
  Row word(n, 0);
  visit(word);
  while (true) {
    std::size_t t = K;
    bool done = true;
    while (t-- > 0) {
      const auto row = impl_->gen.row(t);
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t x = word[j] + row[j];
        word[j] = x >= m.q() ? x - m.q() : x;
      }
      if (++digit[t] < radix[t]) {
        done = false;
        break;
      }
      digit[t] = 0;  // radix * row == 0, so the word already wrapped
    }
    if (done) return;
    visit(word);
  }
}

std::vector<RingVector> LinearCode::codewords(std::uint64_t budget) const {
  std::vector<RingVector> out;
  for_each_codeword([&](std::span<const std::int64_t> w) { out.emplace_back(modulus(), Row(w.begin(), w.end())); },
                    budget);
  return out;
}

const DistanceProfile& LinearCode::distance_profile() const {
  if (is_trivial()) throw UndefinedDistanceError("minimum distance of the zero code is undefined");
  std::call_once(impl_->profile_once, [this] {
    DistanceProfile p;
    p.min_lee = INT64_MAX;
    p.min_hamming = INT64_MAX;
    std::int64_t partial = 0;
    std::uint64_t count = 0;
    const auto& m = modulus();
    for_each_codeword([&](std::span<const std::int64_t> w) {
      const std::int64_t lw = lee_weight(m, w);
      if (lw == 0) return;
      p.min_lee = std::min(p.min_lee, lw);
      p.max_lee = std::max(p.max_lee, lw);
      p.min_hamming = std::min(p.min_hamming, hamming_weight(w));
      partial += lw;
      if (++count % (1u << 20) == 0) {
        p.total_lee += BigInt(std::to_string(partial));
        partial = 0;
      }
    });
    p.total_lee += BigInt(std::to_string(partial));
    p.lee_equidistant = p.min_lee == p.max_lee;
    impl_->profile = std::move(p);
  });
  return impl_->profile;
}

std::int64_t LinearCode::min_lee_distance() const { return distance_profile().min_lee; }
std::int64_t LinearCode::min_hamming_distance() const { return distance_profile().min_hamming; }

std::optional<std::int64_t> LinearCode::lee_equidistant_weight() const {
  const auto& p = distance_profile();
  if (!p.lee_equidistant) return std::nullopt;
  return p.min_lee;
}

Rational LinearCode::average_lee_weight() const {
  const auto& m = modulus();
  const auto& nc = impl_->support.counts;
  const int s = m.s();
  const long support = static_cast<long>(length()) - nc[static_cast<std::size_t>(s)];
  Rational r;
  if (!m.odd()) {
    r = Rational(big_pow(2, static_cast<unsigned long>(s))) * support / 4;
  } else {
    BigInt num = big_pow(m.p(), 2ul * static_cast<unsigned long>(s)) * support;
    for (int i = 0; i < s; ++i) num -= big_pow(m.p(), 2ul * static_cast<unsigned long>(i)) * nc[static_cast<std::size_t>(i)];
    r = Rational(num, 4 * big_pow(m.p(), static_cast<unsigned long>(s)));
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Text format

CodeMatrix read_code_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Modulus> m;
  std::size_t n = 0;
  std::vector<Row> rows;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) fail("not an integer: '" + tok + "'");
        nums.push_back(v);
      } catch (const std::logic_error&) {
        fail("not an integer: '" + tok + "'");
      }
    }
    if (nums.empty()) continue;
    if (!m) {
      if (nums.size() != 3) fail("header must be 'p s n'");
      if (nums[2] < 1) fail("length n must be positive");
      try {
        m.emplace(nums[0], static_cast<int>(nums[1]));
      } catch (const InputError& e) {
        fail(e.what());
      }
      n = static_cast<std::size_t>(nums[2]);
      continue;
    }
    if (nums.size() != n) fail("row has " + std::to_string(nums.size()) + " entries, expected " + std::to_string(n));
    Row r;
    for (auto v : nums) {
      if (v < 0 || v >= m->q()) fail("entry " + std::to_string(v) + " outside [0, " + std::to_string(m->q() - 1) + "]");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  if (!m) throw InputError("line " + std::to_string(line_no) + ": missing 'p s n' header");
  return CodeMatrix(*m, rows, n);
}

CodeMatrix read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open code file '" + path + "'");
  return read_code_matrix(in);
}

void write_code_matrix(std::ostream& out, const CodeMatrix& g) {
  out << g.modulus().p() << ' ' << g.modulus().s() << ' ' << g.cols() << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g.at(r, c);
    out << '\n';
  }
}

}  // namespace leecodes
