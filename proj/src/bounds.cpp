#include "leecodes/bounds.hpp"

#include <algorithm>

namespace leecodes {

namespace {

BigInt floor_of(const Rational& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

std::int64_t to_i64(const BigInt& b) {
  if (!b.fits_slong_p()) throw InputError("bound value " + b.get_str() + " exceeds 64 bits");
  return b.get_si();
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void require_rank(const CodeParams& c, const char* what) {
  if (c.K < 1) throw InputError(std::string(what) + ": needs rank K >= 1");
}

}  // namespace

// ---------------------------------------------------------------------------

CodeParams CodeParams::from_subtype(const Modulus& m, int n, const Subtype& subtype) {
  if (n < 1) throw InputError("length n must be positive");
  if (subtype.size() != static_cast<std::size_t>(m.s()))
    throw InputError("subtype needs exactly s = " + std::to_string(m.s()) + " entries");
  CodeParams c{m, n, Rational(0), 0, 0, 0, std::nullopt};
  int log_p = 0;
  for (std::size_t i = 0; i < subtype.size(); ++i) {
    if (subtype[i] < 0) throw InputError("subtype entries must be non-negative");
    c.K += subtype[i];
    log_p += (m.s() - static_cast<int>(i)) * subtype[i];
  }
  if (c.K > n) throw InputError("rank " + std::to_string(c.K) + " exceeds length " + std::to_string(n));
  c.k1 = subtype.front();
  c.k = make_rational(log_p, m.s());
  c.ceil_k = static_cast<int>(ceil_of(c.k).get_si());
  return c;
}

CodeParams CodeParams::of(const LinearCode& code) {
  return from_subtype(code.modulus(), static_cast<int>(code.length()), code.subtype());
}

BigInt CodeParams::cardinality() const {
  const Rational e = k * modulus.s();
  return big_pow(modulus.p(), static_cast<unsigned long>(floor_of(e).get_ui()));
}

int singleton_hamming(const CodeParams& c) { return c.n - c.ceil_k + 1; }

int singleton_rank(const CodeParams& c) {
  require_rank(c, "singleton_rank");
  return c.n - c.K + 1;
}

int z4_singleton(const CodeParams& c) {
  if (!(c.modulus == Modulus(2, 2))) throw InputError("z4_singleton: modulus must be Z/4");
  return static_cast<int>(floor_of(2 * (c.n - c.k)).get_si()) + 1;
}

int shiromoto_max_d(const CodeParams& c) {
  return static_cast<int>(c.modulus.max_weight()) * (c.n - c.ceil_k + 1);
}

int shiromoto_rank_max_d(const CodeParams& c) {
  require_rank(c, "shiromoto_rank_max_d");
  return static_cast<int>(c.modulus.max_weight()) * (c.n - c.K + 1);
}

int lee_mdr(const CodeParams& c) {
  require_rank(c, "lee_mdr");
  return static_cast<int>(c.modulus.max_weight()) * (c.n - c.K + 1);
}

std::optional<int> alderson_huntemann(const CodeParams& c) {
  if (c.k.get_den() != 1 || c.k <= 1 || c.k >= c.n) return std::nullopt;
  return static_cast<int>(c.modulus.max_weight()) * (c.n - c.ceil_k);
}

Rational wyner_graham(const CodeParams& c) {
  if (c.K < 1) throw InputError("wyner_graham: needs type k > 0");
  const BigInt size = c.cardinality();
  return make_rational(c.n * ideal_total_weight(c.modulus, 0) * size,
                       big_pow(c.modulus.p(), static_cast<unsigned long>(c.modulus.s())) * (size - 1));
}

Rational chiang_wolf_coefficient(const Modulus& m) {
  if (m.odd()) return make_rational(m.q() + 1, 4);
  return make_rational(big_pow(2, 2ul * static_cast<unsigned long>(m.s()) - 2), m.q() - 1);
}

std::optional<Rational> chiang_wolf(const CodeParams& c) {
  if (!c.is_free() || c.k < 2) return std::nullopt;
  return chiang_wolf_coefficient(c.modulus) * (c.n - c.k + 1);
}

std::optional<Rational> chiang_wolf_k1(const CodeParams& c) {
  if (c.k1 < 1) return std::nullopt;
  return chiang_wolf_coefficient(c.modulus) * (c.n - c.k1 + 1);
}

Rational coefficient_A(const Modulus& m, int i) {
  if (i < 1 || i > m.s()) throw InputError("coefficient_A: i must lie in [1, s]");
  const auto s = static_cast<unsigned long>(m.s());
  const auto ii = static_cast<unsigned long>(i);
  if (m.odd()) return make_rational(big_pow(m.p(), s - ii) * (big_pow(m.p(), ii) + 1), 4);
  return make_rational(big_pow(2, s + ii - 2), big_pow(2, ii) - 1);
}

Rational subcode_plotkin(const LinearCode& c, const LinearCode& sub) {
  if (!sub.is_subcode_of(c)) throw InputError("subcode_plotkin: second code is not a subcode of the first");
  if (sub.is_trivial()) throw InputError("subcode_plotkin: subcode must be non-trivial");
  const BigInt size = sub.cardinality();
  return make_rational(size, size - 1) * sub.average_lee_weight();
}

Rational hamming_to_lee(const Modulus& m, int ell, std::int64_t d_h) {
  if (d_h < 0) throw InputError("hamming_to_lee: d_H must be non-negative");
  return coefficient_A(m, ell) * BigInt(std::to_string(d_h));
}

namespace {

RankBound rank_bound_at(const CodeParams& c, int ell) {
  require_rank(c, "new_rank_bound");
  const Rational a = coefficient_A(c.modulus, ell);
  const int span = c.n - c.K + 1;
  return {to_i64(floor_of(a) * span), to_i64(floor_of(a * span))};
}

}  // namespace

RankBound new_rank_bound(const CodeParams& c) { return rank_bound_at(c, 1); }

RankBound new_rank_bound_level(const CodeParams& c) {
  if (!c.ell) throw InputError("new_rank_bound_level: level ell not set");
  return rank_bound_at(c, *c.ell);
}

std::set<int> applicable_levels(const LinearCode& c) {
  std::set<int> levels;
  if (c.is_trivial()) return levels;
  const auto& m = c.modulus();
  const std::int64_t d_h = c.min_hamming_distance();
  c.for_each_codeword([&](std::span<const std::int64_t> w) {
    if (hamming_weight(w) != d_h) return;
    int val = -1;
    for (auto x : w) {
      if (x == 0) continue;
      const int v = m.valuation(x);
      if (val >= 0 && v != val) return;  // some multiple would lose support
      val = v;
    }
    levels.insert(m.s() - val);
  });
  return levels;
}

// ---------------------------------------------------------------------------

bool BoundEntry::attained_by(std::int64_t d) const {
  if (!applicable) return false;
  if (floor_divisor) {
    const Rational q = Rational(BigInt(std::to_string(d - 1))) / *floor_divisor;
    return floor_of(q) == floor_rhs;
  }
  return d == integer;
}

const BoundEntry* BoundReport::find(const std::string& id) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const BoundEntry& e) { return e.id == id; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<std::string> BoundReport::violations(std::int64_t d) const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.applicable && d > e.integer) out.push_back(e.id);
  return out;
}

const std::vector<std::string>& bound_ids() {
  static const std::vector<std::string> ids{
      "z4_singleton",  "shiromoto",      "shiromoto_rank", "lee_mdr",  "alderson_huntemann",
      "wyner_graham",  "chiang_wolf",    "chiang_wolf_k1", "new_rank", "new_rank_floor",
      "new_rank_level"};
  return ids;
}

namespace {

BoundEntry plain(std::string id, std::string label, std::int64_t value) {
  BoundEntry e;
  e.id = std::move(id);
  e.label = std::move(label);
  e.applicable = true;
  e.value = Rational(BigInt(std::to_string(value)));
  e.integer = value;
  return e;
}

BoundEntry from_rational(std::string id, std::string label, const Rational& value) {
  BoundEntry e;
  e.id = std::move(id);
  e.label = std::move(label);
  e.applicable = true;
  e.value = value;
  e.integer = to_i64(floor_of(value));
  return e;
}

// floor((d-1)/divisor) <= rhs, exposed as the largest d satisfying it.
BoundEntry floor_style(std::string id, std::string label, const Rational& divisor, std::int64_t rhs) {
  BoundEntry e;
  e.id = std::move(id);
  e.label = std::move(label);
  e.applicable = true;
  e.value = divisor * BigInt(std::to_string(rhs + 1));
  e.integer = to_i64(ceil_of(e.value));
  e.floor_divisor = divisor;
  e.floor_rhs = rhs;
  return e;
}

BoundEntry inapplicable(std::string id, std::string label) {
  BoundEntry e;
  e.id = std::move(id);
  e.label = std::move(label);
  return e;
}

}  // namespace

BoundReport evaluate_bounds(const CodeParams& c) {
  BoundReport r{c, std::nullopt, {}};
  const Rational M(BigInt(std::to_string(c.modulus.max_weight())));
  const bool nontrivial = c.K >= 1;

  if (c.modulus == Modulus(2, 2) && nontrivial)
    r.entries.push_back(plain("z4_singleton", "Z/4 Singleton", z4_singleton(c)));
  else
    r.entries.push_back(inapplicable("z4_singleton", "Z/4 Singleton"));

  if (!nontrivial) {
    for (const auto& id : bound_ids())
      if (id != "z4_singleton") r.entries.push_back(inapplicable(id, id));
    return r;
  }

  r.entries.push_back(floor_style("shiromoto", "Shiromoto", M, c.n - c.ceil_k));
  r.entries.push_back(floor_style("shiromoto_rank", "Shiromoto (rank)", M, c.n - c.K));
  r.entries.push_back(plain("lee_mdr", "Lee MDR", lee_mdr(c)));
  if (auto ah = alderson_huntemann(c))
    r.entries.push_back(plain("alderson_huntemann", "Alderson-Huntemann", *ah));
  else
    r.entries.push_back(inapplicable("alderson_huntemann", "Alderson-Huntemann"));
  r.entries.push_back(from_rational("wyner_graham", "Wyner-Graham", wyner_graham(c)));
  if (auto cw = chiang_wolf(c))
    r.entries.push_back(from_rational("chiang_wolf", "Chiang-Wolf", *cw));
  else
    r.entries.push_back(inapplicable("chiang_wolf", "Chiang-Wolf"));
  if (auto cw = chiang_wolf_k1(c))
    r.entries.push_back(from_rational("chiang_wolf_k1", "Chiang-Wolf (free rank)", *cw));
  else
    r.entries.push_back(inapplicable("chiang_wolf_k1", "Chiang-Wolf (free rank)"));

  const Rational a1 = coefficient_A(c.modulus, 1);
  auto rank = from_rational("new_rank", "rank Plotkin-Singleton", a1 * (c.n - c.K + 1));
  rank.stated = new_rank_bound(c).stated;
  r.entries.push_back(std::move(rank));
  r.entries.push_back(floor_style("new_rank_floor", "rank Plotkin-Singleton (floor form)", a1, c.n - c.K));

  if (c.ell) {
    const Rational a = coefficient_A(c.modulus, *c.ell);
    auto level = from_rational("new_rank_level", "rank Plotkin-Singleton at level " + std::to_string(*c.ell),
                               a * (c.n - c.K + 1));
    level.stated = new_rank_bound_level(c).stated;
    r.entries.push_back(std::move(level));
  } else {
    r.entries.push_back(inapplicable("new_rank_level", "rank Plotkin-Singleton at level"));
  }
  return r;
}

BoundReport evaluate_bounds(const LinearCode& code) {
  CodeParams params = CodeParams::of(code);
  if (code.is_trivial()) return evaluate_bounds(params);
  params.ell = *applicable_levels(code).rbegin();
  BoundReport r = evaluate_bounds(params);
  const std::int64_t d = code.min_lee_distance();
  r.d_lee = d;
  for (auto& e : r.entries)
    if (e.applicable) e.attained = e.attained_by(d);
  return r;
}

bool attainment_check(const LinearCode& c, const std::string& bound_id) {
  if (std::find(bound_ids().begin(), bound_ids().end(), bound_id) == bound_ids().end())
    throw InputError("unknown bound '" + bound_id + "'");
  const BoundReport r = evaluate_bounds(c);
  const BoundEntry* e = r.find(bound_id);
  if (!e || !e->applicable) throw InputError("bound '" + bound_id + "' is not applicable to this code");
  return *e->attained;
}

}  // namespace leecodes
