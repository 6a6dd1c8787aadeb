#include "leecodes/search.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "leecodes/constructions.hpp"
#include "leecodes/equivalence.hpp"

namespace leecodes {

using json = nlohmann::json;

namespace {

using Row = std::vector<std::int64_t>;

std::vector<int> row_valuations(const Subtype& subtype) {
  std::vector<int> v;
  for (std::size_t b = 0; b < subtype.size(); ++b) v.insert(v.end(), static_cast<std::size_t>(subtype[b]), static_cast<int>(b));
  return v;
}

// Pivot column sets per block, each block taking an increasing combination of
// the columns left over by earlier blocks. Lexicographic, hence deterministic.
std::vector<std::vector<std::size_t>> pivot_placements(int n, const Subtype& subtype) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(std::size_t, std::size_t, int)> place = [&](std::size_t block, std::size_t from, int left) {
    if (block == subtype.size()) {
      out.push_back(current);
      return;
    }
    if (left == 0) {
      place(block + 1, 0, block + 1 < subtype.size() ? subtype[block + 1] : 0);
      return;
    }
    for (std::size_t c = from; c < static_cast<std::size_t>(n); ++c) {
      if (used[c]) continue;
      used[c] = true;
      current.push_back(c);
      place(block, c + 1, left - 1);
      current.pop_back();
      used[c] = false;
    }
  };
  place(0, 0, subtype.empty() ? 0 : subtype[0]);
  return out;
}

struct Slot {
  std::size_t row;
  std::size_t col;
  std::int64_t radix;
  std::int64_t scale;
};

// Visits every assignment of the slots in mixed-radix order (last slot fastest).
void sweep(std::vector<Slot> const& slots, Row& entries, std::size_t n,
           const std::function<void()>& visit) {
  std::vector<std::int64_t> digit(slots.size(), 0);
  for (const auto& s : slots) entries[s.row * n + s.col] = 0;
  while (true) {
    visit();
    std::size_t i = slots.size();
    while (i-- > 0) {
      const auto& s = slots[i];
      if (++digit[i] < s.radix) {
        entries[s.row * n + s.col] = digit[i] * s.scale;
        break;
      }
      digit[i] = 0;
      entries[s.row * n + s.col] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

BigInt binomial(long n, long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Reduced strategy: canonical column classes (column <= its negative, lexicographically).
std::vector<Row> column_classes(const Modulus& m, const std::vector<int>& vals) {
  const std::size_t K = vals.size();
  std::vector<Row> out;
  Row col(K, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == K) {
      Row neg(K);
      for (std::size_t i = 0; i < K; ++i) neg[i] = m.neg(col[i]);
      if (col <= neg) out.push_back(col);
      return;
    }
    const std::int64_t scale = m.power(vals[t]);
    for (std::int64_t a = 0; a < m.power(m.s() - vals[t]); ++a) {
      col[t] = a * scale;
      rec(t + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Slot> reduced_pivot_slots(const Modulus& m, const std::vector<int>& vals) {
  std::vector<Slot> slots;
  for (std::size_t t = 0; t < vals.size(); ++t)
    for (std::size_t u = t + 1; u < vals.size(); ++u)
      if (vals[u] > vals[t]) slots.push_back({t, u, m.power(vals[u] - vals[t]), m.power(vals[t])});
  return slots;
}

BigInt slot_product(const std::vector<Slot>& slots) {
  BigInt r = 1;
  for (const auto& s : slots) r *= s.radix;
  return r;
}

}  // namespace

std::string to_string(Strategy s) { return s == Strategy::systematic ? "systematic" : "reduced"; }

Strategy parse_strategy(const std::string& s) {
  if (s == "systematic") return Strategy::systematic;
  if (s == "reduced") return Strategy::reduced;
  throw InputError("unknown strategy '" + s + "' (expected systematic or reduced)");
}

SearchSpace::SearchSpace(Modulus m, int len, Subtype st, Strategy strat)
    : modulus(std::move(m)), n(len), subtype(std::move(st)), strategy(strat) {
  if (n < 1) throw InputError("search space: n must be positive");
  if (subtype.size() != static_cast<std::size_t>(modulus.s()))
    throw InputError("search space: subtype needs s = " + std::to_string(modulus.s()) + " entries");
  for (int k : subtype)
    if (k < 0) throw InputError("search space: subtype entries must be non-negative");
  if (rank() > n) throw InputError("search space: rank exceeds length");
}

int SearchSpace::rank() const {
  int K = 0;
  for (int k : subtype) K += k;
  return K;
}

BigInt SearchSpace::candidate_count() const {
  const auto vals = row_valuations(subtype);
  const int K = rank();
  if (strategy == Strategy::reduced) {
    const BigInt classes = static_cast<unsigned long>(column_classes(modulus, vals).size());
    const long f = n - K;
    return slot_product(reduced_pivot_slots(modulus, vals)) * binomial(classes.get_si() + f - 1 < 0 ? 0 : classes.get_si() + f - 1, f);
  }
  // placements: n! / (k_1! ... k_s! (n-K)!)
  BigInt placements = 1;
  long left = n;
  for (int k : subtype) {
    placements *= binomial(left, k);
    left -= k;
  }
  BigInt fillings = 1;
  for (std::size_t t = 0; t < vals.size(); ++t) {
    long later = 0;
    for (std::size_t u = 0; u < vals.size(); ++u)
      if (vals[u] > vals[t]) ++later;
    const BigInt radix = modulus.power(modulus.s() - vals[t]);
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), radix.get_mpz_t(), static_cast<unsigned long>(later + n - K));
    fillings *= r;
  }
  return placements * fillings;
}

std::string SearchSpace::describe() const {
  std::string st;
  for (std::size_t i = 0; i < subtype.size(); ++i) st += (i ? "," : "") + std::to_string(subtype[i]);
  return "Z/" + std::to_string(modulus.q()) + " n=" + std::to_string(n) + " subtype (" + st + ")";
}

std::vector<Subtype> all_subtypes(const Modulus& m, int n) {
  std::vector<Subtype> out;
  Subtype cur(static_cast<std::size_t>(m.s()), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == cur.size()) {
      if (left < n) out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, n);
  return out;
}

std::size_t work_units(const SearchSpace& space) {
  if (space.strategy == Strategy::systematic) return pivot_placements(space.n, space.subtype).size();
  const auto vals = row_valuations(space.subtype);
  const BigInt fillings = slot_product(reduced_pivot_slots(space.modulus, vals));
  const std::size_t classes = space.n > space.rank() ? column_classes(space.modulus, vals).size() : 1;
  return static_cast<std::size_t>(fillings.get_ui()) * classes;
}

void enumerate_unit(const SearchSpace& space, std::size_t unit, const std::function<void(const LinearCode&)>& visit) {
  const auto& m = space.modulus;
  const auto vals = row_valuations(space.subtype);
  const std::size_t K = vals.size();
  const auto n = static_cast<std::size_t>(space.n);
  Row entries(K * n, 0);
  auto emit = [&] { visit(LinearCode::from_generator(CodeMatrix(m, K, n, entries))); };

  if (space.strategy == Strategy::systematic) {
    const auto placements = pivot_placements(space.n, space.subtype);
    const auto& pivots = placements.at(unit);
    std::vector<int> pivot_row(n, -1);
    for (std::size_t t = 0; t < K; ++t) pivot_row[pivots[t]] = static_cast<int>(t);
    std::vector<Slot> slots;
    for (std::size_t t = 0; t < K; ++t) {
      entries[t * n + pivots[t]] = m.power(vals[t]);
      for (std::size_t c = 0; c < n; ++c) {
        const int u = pivot_row[c];
        if (u >= 0 && vals[static_cast<std::size_t>(u)] <= vals[t]) continue;
        slots.push_back({t, c, m.power(m.s() - vals[t]), m.power(vals[t])});
      }
    }
    sweep(slots, entries, n, emit);
    return;
  }

  // reduced: unit = pivot filling index * classes + first free class
  const auto pivot_slots = reduced_pivot_slots(m, vals);
  const auto classes = column_classes(m, vals);
  const std::size_t f = n - K;
  const std::size_t per = f > 0 ? classes.size() : 1;
  std::size_t filling = unit / per;
  const std::size_t first = unit % per;
  for (std::size_t t = 0; t < K; ++t) entries[t * n + t] = m.power(vals[t]);
  for (std::size_t i = pivot_slots.size(); i-- > 0;) {
    const auto& s = pivot_slots[i];
    entries[s.row * n + s.col] = static_cast<std::int64_t>(filling % static_cast<std::size_t>(s.radix)) * s.scale;
    filling /= static_cast<std::size_t>(s.radix);
  }
  if (f == 0) {
    emit();
    return;
  }
  std::vector<std::size_t> idx(f, first);
  auto place = [&] {
    for (std::size_t j = 0; j < f; ++j)
      for (std::size_t t = 0; t < K; ++t) entries[t * n + K + j] = classes[idx[j]][t];
  };
  while (true) {
    place();
    emit();
    // next non-decreasing sequence with idx[0] fixed
    std::size_t j = f;
    while (j-- > 1) {
      if (idx[j] + 1 < classes.size()) break;
    }
    if (j == 0) return;
    const std::size_t v = idx[j] + 1;
    for (std::size_t r = j; r < f; ++r) idx[r] = v;
  }
}

void check_search_budget(const SearchSpace& space, std::uint64_t budget) {
  const BigInt count = space.candidate_count();
  if (count > BigInt(std::to_string(budget)))
    throw BudgetError(space.describe() + ": " + count.get_str() + " candidate generators exceed the budget of " +
                          std::to_string(budget),
                      count.fits_ulong_p() ? count.get_ui() : UINT64_MAX, budget);
}

void enumerate_codes(const SearchSpace& space, const std::function<void(const LinearCode&)>& visit,
                     std::uint64_t budget) {
  check_search_budget(space, budget);
  const std::size_t units = work_units(space);
  for (std::size_t u = 0; u < units; ++u) enumerate_unit(space, u, visit);
}

void parallel_units(std::size_t units, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, units));
  if (threads <= 1) {
    for (std::size_t u = 0; u < units; ++u) body(u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t u; (u = next.fetch_add(1)) < units;) {
        try {
          body(u);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Census

namespace {

// Raw optimal codes of one unit, deduplicated by exact generator only.
struct OptimalSet {
  std::int64_t d = 0;
  std::uint64_t count = 0;
  std::set<std::vector<std::int64_t>> keys;
  std::vector<LinearCode> codes;

  void offer(const LinearCode& c, std::int64_t dist, bool keep) {
    if (dist < d) return;
    if (dist > d) {
      d = dist;
      count = 0;
      keys.clear();
      codes.clear();
    }
    ++count;
    if (keep && keys.insert(generator_key(c)).second) codes.push_back(c);
  }
};

}  // namespace

void CensusResult::merge(const CensusResult& other) {
  candidates += other.candidates;
  for (auto [d, c] : other.distance_histogram) distance_histogram[d] += c;
  for (const auto& [id, c] : other.attaining) attaining[id] += c;
  bound_violations += other.bound_violations;
  if (other.max_d_lee > max_d_lee) {
    max_d_lee = other.max_d_lee;
    optimal_candidates = other.optimal_candidates;
    optimal_codes = other.optimal_codes;
  } else if (other.max_d_lee == max_d_lee) {
    optimal_candidates += other.optimal_candidates;
    auto all = optimal_codes;
    all.insert(all.end(), other.optimal_codes.begin(), other.optimal_codes.end());
    optimal_codes = dedupe_equivalent(all);
  }
}

CensusResult max_lee_distance_census(const SearchSpace& space, const CensusOptions& options) {
  check_search_budget(space, options.budget);
  const std::size_t units = work_units(space);
  const BoundReport report = evaluate_bounds(CodeParams::from_subtype(space.modulus, space.n, space.subtype));

  struct Partial {
    std::uint64_t candidates = 0;
    std::uint64_t violations = 0;
    std::map<std::int64_t, std::uint64_t> histogram;
    std::map<std::string, std::uint64_t> attaining;
    OptimalSet optimal;
  };
  std::vector<Partial> parts(units);
  parallel_units(units, options.threads, [&](std::size_t u) {
    Partial& part = parts[u];
    enumerate_unit(space, u, [&](const LinearCode& c) {
      ++part.candidates;
      if (c.is_trivial()) return;
      const std::int64_t d = c.min_lee_distance();
      ++part.histogram[d];
      for (const auto& e : report.entries) {
        if (!e.applicable) continue;
        if (e.attained_by(d)) ++part.attaining[e.id];
        if (d > e.integer) ++part.violations;
      }
      part.optimal.offer(c, d, options.keep_optimal);
    });
  });

  CensusResult result(space);
  std::vector<LinearCode> pool;
  for (auto& part : parts) {
    result.candidates += part.candidates;
    result.bound_violations += part.violations;
    for (auto [d, c] : part.histogram) result.distance_histogram[d] += c;
    for (const auto& [id, c] : part.attaining) result.attaining[id] += c;
    if (part.optimal.count == 0) continue;
    if (part.optimal.d > result.max_d_lee) {
      result.max_d_lee = part.optimal.d;
      result.optimal_candidates = 0;
      pool.clear();
    }
    if (part.optimal.d == result.max_d_lee) {
      result.optimal_candidates += part.optimal.count;
      pool.insert(pool.end(), part.optimal.codes.begin(), part.optimal.codes.end());
    }
  }
  // exact duplicates across units first, then equivalence classes
  std::set<std::vector<std::int64_t>> seen;
  std::vector<LinearCode> unique;
  for (const auto& c : pool)
    if (seen.insert(generator_key(c)).second) unique.push_back(c);
  result.optimal_codes = dedupe_equivalent(unique);
  return result;
}

std::vector<LinearCode> find_attaining_codes(const SearchSpace& space, const std::string& bound_id,
                                             const CensusOptions& options) {
  check_search_budget(space, options.budget);
  const BoundReport report = evaluate_bounds(CodeParams::from_subtype(space.modulus, space.n, space.subtype));
  const BoundEntry* entry = report.find(bound_id);
  if (!entry) throw InputError("unknown bound '" + bound_id + "'");
  if (!entry->applicable) return {};
  const std::size_t units = work_units(space);
  std::vector<std::vector<LinearCode>> found(units);
  parallel_units(units, options.threads, [&](std::size_t u) {
    std::set<std::vector<std::int64_t>> keys;
    enumerate_unit(space, u, [&](const LinearCode& c) {
      if (c.is_trivial() || !entry->attained_by(c.min_lee_distance())) return;
      if (keys.insert(generator_key(c)).second) found[u].push_back(c);
    });
  });
  std::set<std::vector<std::int64_t>> seen;
  std::vector<LinearCode> unique;
  for (const auto& list : found)
    for (const auto& c : list)
      if (seen.insert(generator_key(c)).second) unique.push_back(c);
  return dedupe_equivalent(unique);
}

bool verify_mds_socle(const LinearCode& c) {
  if (c.is_trivial()) return false;
  return c.socle().min_hamming_distance() == static_cast<std::int64_t>(c.length()) - c.rank() + 1;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json generator_json(const LinearCode& c) {
  json rows = json::array();
  for (const auto& r : c.generator().to_rows()) rows.push_back(r);
  return rows;
}

json code_json(const LinearCode& c) {
  json j;
  j["generator"] = generator_json(c);
  j["subtype"] = c.subtype();
  j["support_subtype"] = c.support_subtype().counts;
  if (!c.is_trivial()) j["d_lee"] = c.min_lee_distance();
  return j;
}

json space_json(const SearchSpace& s) {
  return {{"p", s.modulus.p()}, {"s", s.modulus.s()}, {"n", s.n}, {"subtype", s.subtype},
          {"strategy", to_string(s.strategy)}};
}

}  // namespace

std::string CensusResult::to_json(int indent) const {
  json j;
  j["format_version"] = kFormatVersion;
  j["space"] = space_json(space);
  j["max_d_lee"] = max_d_lee;
  j["candidates_examined"] = candidates;
  j["optimal_candidates"] = optimal_candidates;
  j["optimal_codes"] = json::array();
  for (const auto& c : optimal_codes) j["optimal_codes"].push_back(code_json(c));
  j["distance_histogram"] = json::array();
  for (auto [d, c] : distance_histogram) j["distance_histogram"].push_back({{"d_lee", d}, {"count", c}});
  j["bound_attainment"] = json::object();
  for (const auto& [id, c] : attaining) j["bound_attainment"][id] = c;
  j["bound_violations"] = bound_violations;
  return j.dump(indent);
}

// ---------------------------------------------------------------------------
// Characterizations

namespace {

LinearCode repeated(const Modulus& m, std::size_t n, std::int64_t value) {
  return LinearCode::from_generator(CodeMatrix(m, std::vector<Row>{Row(n, value)}, n));
}

bool is_half_repetition(const LinearCode& c) {
  const auto& m = c.modulus();
  if (m.odd() || c.rank() != 1 || c.subtype().back() != 1) return false;
  return c == repeated(m, c.length(), m.power(m.s() - 1));
}

bool is_five_pair(const LinearCode& c) {
  if (c.modulus().q() != 5 || c.length() != 2 || c.rank() != 1) return false;
  static const LinearCode ref = LinearCode::from_generator(CodeMatrix::from_rows(Modulus(5, 1), {{1, 2}}));
  return signed_permutation_equivalent(c, ref);
}

bool is_ambient(const LinearCode& c) { return c.free_rank() == static_cast<int>(c.length()); }

struct Rule {
  std::string description;
  bool necessary_only = false;
  bool rank_two_only = false;
  std::function<bool(const LinearCode&, std::int64_t)> attains;
  std::function<bool(const LinearCode&)> required;   // must attain
  std::function<bool(const LinearCode&)> permitted;  // may attain
};

std::function<bool(const LinearCode&, std::int64_t)> attains_bound(const std::string& id, bool skip_ambient) {
  return [id, skip_ambient](const LinearCode& c, std::int64_t d) {
    if (skip_ambient && is_ambient(c)) return false;
    const BoundReport r = evaluate_bounds(CodeParams::of(c));
    const BoundEntry* e = r.find(id);
    return e && e->applicable && e->attained_by(d);
  };
}

auto never = [](const LinearCode&) { return false; };

Rule make_rule(const std::string& id) {
  Rule r;
  if (id == "shiromoto") {
    r.description = "codes meeting the Shiromoto bound, ambient space excluded";
    r.attains = attains_bound("shiromoto", true);
    r.required = [](const LinearCode& c) {
      const CodeParams p = CodeParams::of(c);
      const bool full_rank_non_free = p.K == p.n && p.ceil_k == p.n && p.k != p.K;
      if (c.modulus().odd()) return is_five_pair(c) || full_rank_non_free;
      return is_half_repetition(c) || full_rank_non_free;
    };
    r.permitted = [](const LinearCode& c) {
      const CodeParams p = CodeParams::of(c);
      return !c.modulus().odd() && p.K == p.n - 1 && p.ceil_k == p.K && p.k != p.K;
    };
  } else if (id == "z4_singleton") {
    r.description = "codes meeting the Z/4 Singleton bound, ambient space included";
    r.attains = attains_bound("z4_singleton", false);
    r.required = [](const LinearCode& c) {
      if (!(c.modulus() == Modulus(2, 2))) return false;
      const LinearCode rep = repeated(c.modulus(), c.length(), 2);
      return is_ambient(c) || c == rep || c == rep.dual();
    };
    r.permitted = never;
  } else if (id == "alderson_huntemann") {
    r.description = "necessary conditions for meeting the Alderson-Huntemann bound";
    r.necessary_only = true;
    r.attains = attains_bound("alderson_huntemann", false);
    r.required = never;
    r.permitted = [](const LinearCode& c) {
      const CodeParams p = CodeParams::of(c);
      const auto k = static_cast<int>(p.k.get_num().get_si());  // integral whenever the bound applies
      const std::int64_t q = c.modulus().q();
      const int s = c.modulus().s();
      if (c.modulus().odd())
        return (q == 5 && k + 1 <= p.n && p.n <= k + 3) || (p.is_free() && (q == 7 || q == 9) && p.n == k + 1);
      return (p.is_free() && s == 2 && k + 1 <= p.n && p.n <= k + 2) || (p.is_free() && s == 3 && p.n == k + 1) ||
             (k + 1 == p.K && (p.K == p.n || p.K == p.n - 1));
    };
  } else if (id == "shiromoto_rank") {
    r.description = "necessary conditions for meeting the rank version of the Shiromoto bound";
    r.necessary_only = true;
    r.attains = attains_bound("shiromoto_rank", false);
    r.required = never;
    r.permitted = [](const LinearCode& c) {
      const CodeParams p = CodeParams::of(c);
      if (c.modulus().odd()) return p.K == p.n || is_five_pair(c);
      return is_half_repetition(c) || p.K == p.n || p.K == p.n - 1;
    };
  } else if (id == "new_rank") {
    r.description = "necessary conditions (p odd) for d_L = A(p,s,1)(n-K+1)";
    r.necessary_only = true;
    r.attains = [](const LinearCode& c, std::int64_t d) {
      const CodeParams p = CodeParams::of(c);
      return Rational(BigInt(std::to_string(d))) == coefficient_A(c.modulus(), 1) * (p.n - p.K + 1);
    };
    r.required = never;
    r.permitted = [](const LinearCode& c) {
      const CodeParams p = CodeParams::of(c);
      const std::int64_t pr = c.modulus().p();
      const std::int64_t base = c.modulus().power(c.modulus().s() - 1) * (pr * pr - 1);
      const std::int64_t d = c.min_lee_distance();
      if (p.n > pr + 1) return false;
      const bool doubled = p.K == p.n - pr + 2 && p.K <= 3 && 4 * d == base;
      const bool single = 2 * p.K == 2 * p.n + 2 - (pr - 1) && 2 * p.K <= pr + 5 && 8 * d == base;
      return doubled || single;
    };
  } else if (id == "rank2_equidistant") {
    r.description = "rank-2 Lee-equidistant codes must have a generator of order p (k_s > 0)";
    r.necessary_only = true;
    r.rank_two_only = true;
    r.attains = [](const LinearCode& c, std::int64_t) { return c.is_lee_equidistant(); };
    r.required = never;
    r.permitted = [](const LinearCode& c) { return c.subtype().back() > 0; };
  } else {
    throw InputError("unknown characterization '" + id + "'");
  }
  return r;
}

constexpr std::size_t kExamplesPerUnit = 8;
constexpr std::size_t kExampleClasses = 5;

std::vector<LinearCode> first_classes(const std::vector<LinearCode>& codes) {
  auto reps = dedupe_equivalent(codes);
  if (reps.size() > kExampleClasses) reps.erase(reps.begin() + kExampleClasses, reps.end());
  return reps;
}

}  // namespace

std::string ModulusCharacterization::verdict() const {
  if (missing && extra) return "MISSING+EXTRA";
  if (missing) return "MISSING";
  if (extra) return "EXTRA";
  return "EQUAL";
}

std::string CharacterizationReport::verdict() const {
  bool missing = false, extra = false;
  for (const auto& m : per_modulus) {
    missing = missing || m.missing;
    extra = extra || m.extra;
  }
  if (missing && extra) return "MISSING+EXTRA";
  if (missing) return "MISSING";
  if (extra) return "EXTRA";
  return "EQUAL";
}

std::string CharacterizationReport::to_json(int indent) const {
  json j;
  j["format_version"] = 1;
  j["id"] = id;
  j["description"] = description;
  j["necessary_only"] = necessary_only;
  j["verdict"] = verdict();
  j["moduli"] = json::array();
  for (const auto& m : per_modulus) {
    json e{{"p", m.modulus.p()},      {"s", m.modulus.s()},       {"candidates", m.candidates},
           {"attaining", m.attaining}, {"missing", m.missing},     {"extra", m.extra},
           {"verdict", m.verdict()}};
    e["missing_examples"] = json::array();
    for (const auto& c : m.missing_examples) e["missing_examples"].push_back(code_json(c));
    e["extra_examples"] = json::array();
    for (const auto& c : m.extra_examples) e["extra_examples"].push_back(code_json(c));
    j["moduli"].push_back(std::move(e));
  }
  return j.dump(indent);
}

const std::vector<std::string>& characterization_ids() {
  static const std::vector<std::string> ids{"shiromoto",      "z4_singleton", "alderson_huntemann",
                                            "shiromoto_rank", "new_rank",     "rank2_equidistant"};
  return ids;
}

CharacterizationRange default_range(const std::string& id) {
  CharacterizationRange r;
  if (id == "z4_singleton") {
    r.moduli = {Modulus(2, 2)};
  } else if (id == "new_rank") {
    r.moduli = {Modulus(3, 1), Modulus(5, 1), Modulus(7, 1), Modulus(3, 2)};
  } else if (id == "rank2_equidistant") {
    r.moduli = {Modulus(3, 2)};
    r.n_max = 6;
  } else {
    make_rule(id);  // validates the id
    r.moduli = {Modulus(2, 2), Modulus(5, 1), Modulus(7, 1), Modulus(2, 3), Modulus(3, 2)};
  }
  return r;
}

CharacterizationReport check_characterization(const std::string& id, const CharacterizationRange& range) {
  const Rule rule = make_rule(id);
  CharacterizationReport report;
  report.id = id;
  report.description = rule.description;
  report.necessary_only = rule.necessary_only;

  for (const auto& m : range.moduli) {
    ModulusCharacterization mc{m, 0, 0, 0, 0, {}, {}};
    std::vector<LinearCode> missing_pool, extra_pool;
    for (int n = 1; n <= range.n_max; ++n) {
      for (const auto& subtype : all_subtypes(m, n)) {
        SearchSpace space(m, n, subtype, range.strategy);
        if (rule.rank_two_only && space.rank() != 2) continue;
        check_search_budget(space, range.options.budget);
        struct Acc {
          std::uint64_t candidates = 0, attaining = 0, missing = 0, extra = 0;
          std::vector<LinearCode> missing_ex, extra_ex;
        };
        const std::size_t units = work_units(space);
        std::vector<Acc> acc(units);
        parallel_units(units, range.options.threads, [&](std::size_t u) {
          Acc& a = acc[u];
          enumerate_unit(space, u, [&](const LinearCode& c) {
            ++a.candidates;
            const bool att = rule.attains(c, c.min_lee_distance());
            a.attaining += att;
            const bool req = rule.required(c);
            if (req && !att) {
              ++a.missing;
              if (a.missing_ex.size() < kExamplesPerUnit) a.missing_ex.push_back(c);
            }
            if (att && !req && !rule.permitted(c)) {
              ++a.extra;
              if (a.extra_ex.size() < kExamplesPerUnit) a.extra_ex.push_back(c);
            }
          });
        });
        for (auto& a : acc) {
          mc.candidates += a.candidates;
          mc.attaining += a.attaining;
          mc.missing += a.missing;
          mc.extra += a.extra;
          missing_pool.insert(missing_pool.end(), a.missing_ex.begin(), a.missing_ex.end());
          extra_pool.insert(extra_pool.end(), a.extra_ex.begin(), a.extra_ex.end());
        }
      }
    }
    mc.missing_examples = first_classes(missing_pool);
    mc.extra_examples = first_classes(extra_pool);
    report.per_modulus.push_back(std::move(mc));
  }
  return report;
}

}  // namespace leecodes
