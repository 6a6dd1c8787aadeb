#include "leecodes/reproduction.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "leecodes/reference_data.hpp"

namespace leecodes {

using json = nlohmann::json;

namespace {

std::int64_t floor_i64(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

const json& table1_data() {
  static const json j = json::parse(reference_data::kTable1);
  return j;
}

const json& figure_data() {
  static const json j = json::parse(reference_data::kFigures);
  return j;
}

}  // namespace

CodeParams FigureSpec::params(int k2) const {
  Subtype st(static_cast<std::size_t>(modulus.s()), 0);
  st[0] = k1;
  if (st.size() > 1) st[1] = k2;
  return CodeParams::from_subtype(modulus, 2 * (k1 + k2), st);
}

const std::vector<FigureSpec>& figure_specs() {
  static const std::vector<FigureSpec> specs{
      {1, Modulus(3, 5), 10, 15},
      {2, Modulus(5, 2), 15, 15},
      {3, Modulus(5, 5), 10, 15},
  };
  return specs;
}

const FigureSpec& figure_spec(int id) {
  for (const auto& f : figure_specs())
    if (f.id == id) return f;
  throw InputError("unknown figure " + std::to_string(id) + " (expected 1, 2 or 3)");
}

const std::vector<std::string>& figure_curve_ids() {
  static const std::vector<std::string> ids{"chiang_wolf_k1", "new_rank", "wyner_graham", "shiromoto",
                                            "alderson_huntemann"};
  return ids;
}

std::int64_t figure_value(const FigureSpec& f, int k2, const std::string& curve) {
  const CodeParams c = f.params(k2);
  if (curve == "chiang_wolf_k1") return floor_i64(*chiang_wolf_k1(c));
  if (curve == "new_rank") return new_rank_bound(c).plotted;
  if (curve == "wyner_graham") return floor_i64(wyner_graham(c));
  // the plotted Shiromoto curve uses the rank K, not ceil(k)
  if (curve == "shiromoto") return shiromoto_rank_max_d(c);
  if (curve == "alderson_huntemann") return floor_i64(Rational(c.modulus.max_weight()) * (c.n - c.k));
  throw InputError("unknown curve '" + curve + "'");
}

std::string figure_csv(int id) {
  const FigureSpec& f = figure_spec(id);
  std::ostringstream out;
  out << "k2,bound_id,value\n";
  for (int k2 = 0; k2 <= f.k2_max; ++k2)
    for (const auto& curve : figure_curve_ids()) out << k2 << ',' << curve << ',' << figure_value(f, k2, curve) << '\n';
  return out.str();
}

ReferenceComparison compare_figure(int id) {
  const FigureSpec& f = figure_spec(id);
  ReferenceComparison cmp;
  for (const auto& fig : figure_data().at("figures")) {
    if (fig.at("figure").get<int>() != id) continue;
    for (const auto& curve : figure_curve_ids()) {
      const auto& ref = fig.at("curves").at(curve);
      for (int k2 = 0; k2 <= f.k2_max; ++k2) {
        ++cmp.compared;
        const auto expected = ref.at(static_cast<std::size_t>(k2)).get<std::int64_t>();
        const auto got = figure_value(f, k2, curve);
        if (got != expected)
          cmp.mismatches.push_back("figure " + std::to_string(id) + " " + curve + " k2=" + std::to_string(k2) +
                                   ": reference " + std::to_string(expected) + ", computed " + std::to_string(got));
      }
    }
  }
  return cmp;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& table1_columns() {
  static const std::vector<std::string> cols{"max_d_lee",          "singleton",    "shiromoto",
                                             "rank_singleton",     "alderson_huntemann", "wyner_graham",
                                             "chiang_wolf",        "corollary"};
  return cols;
}

std::optional<std::int64_t> table1_bound(const CodeParams& c, const std::string& column) {
  if (column == "singleton") return z4_singleton(c);
  if (column == "shiromoto") return shiromoto_max_d(c);
  if (column == "rank_singleton") return shiromoto_rank_max_d(c);
  if (column == "alderson_huntemann") {
    auto v = alderson_huntemann(c);
    return v ? std::optional<std::int64_t>(*v) : std::nullopt;
  }
  if (column == "wyner_graham") return floor_i64(wyner_graham(c));
  if (column == "chiang_wolf") {
    if (auto v = chiang_wolf(c)) return floor_i64(*v);
    if (c.is_free() && c.k1 >= 1) return floor_i64(*chiang_wolf_k1(c));
    return std::nullopt;
  }
  if (column == "corollary") {
    // rank bound at level 1, tightened by the level-s bound over the free part
    std::int64_t v = new_rank_bound(c).plotted;
    if (c.k1 >= 1) v = std::min(v, floor_i64(coefficient_A(c.modulus, c.modulus.s()) * (c.n - c.k1 + 1)));
    return v;
  }
  throw InputError("unknown table column '" + column + "'");
}

namespace {

std::string cell_name(const Table1Row& r, const Table1Cell& c) {
  const auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  return "row " + std::to_string(r.row) + " (n=" + std::to_string(r.params.n) + ", K=" + std::to_string(r.params.K) +
         ", k=" + r.params.k.get_str() + ", k1=" + std::to_string(r.params.k1) + ") " + c.column + ": reference " +
         opt(c.reference) + ", computed " + opt(c.computed);
}

}  // namespace

std::vector<std::string> Table1Report::undocumented_mismatches() const {
  std::vector<std::string> out;
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      if (!c.matches() && !c.documented) out.push_back(cell_name(r, c));
  return out;
}

std::vector<std::string> Table1Report::unused_documentation() const {
  std::vector<std::string> out;
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      if (c.matches() && c.documented) out.push_back(cell_name(r, c));
  return out;
}

bool Table1Report::matches_documentation() const {
  return undocumented_mismatches().empty() && unused_documentation().empty();
}

std::uint64_t Table1Report::bound_violations() const {
  std::uint64_t v = 0;
  for (const auto& r : rows) v += r.bound_violations;
  return v;
}

std::string Table1Report::csv() const {
  std::ostringstream out;
  out << "row,n,K,k,k1";
  for (const auto& col : table1_columns()) out << ',' << col << ",reference_" << col;
  out << '\n';
  const auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const auto& r : rows) {
    out << r.row << ',' << r.params.n << ',' << r.params.K << ',' << r.params.k.get_str() << ',' << r.params.k1;
    for (const auto& c : r.cells) out << ',' << opt(c.computed) << ',' << opt(c.reference);
    out << '\n';
  }
  return out.str();
}

std::string Table1Report::mismatch_report() const {
  std::ostringstream out;
  std::size_t documented = 0;
  for (const auto& r : rows)
    for (const auto& c : r.cells)
      if (!c.matches() && c.documented) {
        out << "documented   " << cell_name(r, c) << "  [" << c.note << "]\n";
        ++documented;
      }
  for (const auto& line : undocumented_mismatches()) out << "UNDOCUMENTED " << line << '\n';
  for (const auto& line : unused_documentation()) out << "documented but matching: " << line << '\n';
  out << "mismatches: " << documented + undocumented_mismatches().size() << " (" << documented << " documented, "
      << undocumented_mismatches().size() << " undocumented)\n";
  return out.str();
}

Table1Report reproduce_table1(const CensusOptions& options) {
  const Modulus z4(2, 2);
  Table1Report report;
  for (const auto& jr : table1_data().at("rows")) {
    const int n = jr.at("n").get<int>();
    const auto subtype = jr.at("subtype").get<Subtype>();
    Table1Row row{jr.at("row").get<int>(), CodeParams::from_subtype(z4, n, subtype), subtype, {}, 0};
    if (row.params.k.get_str() != jr.at("k").get<std::string>() || row.params.K != jr.at("K").get<int>())
      throw std::logic_error("reference table row " + std::to_string(row.row) + " disagrees with its subtype");

    std::map<std::string, std::string> notes;
    for (const auto& d : jr.at("documented_mismatches")) notes[d.at("column")] = d.at("note");

    CensusOptions opts = options;
    opts.keep_optimal = false;
    const CensusResult census = max_lee_distance_census(SearchSpace(z4, n, row.subtype), opts);
    row.bound_violations = census.bound_violations;

    for (const auto& col : table1_columns()) {
      Table1Cell cell;
      cell.column = col;
      const auto& ref = jr.at("reference").at(col);
      if (!ref.is_null()) cell.reference = ref.get<std::int64_t>();
      cell.computed = col == "max_d_lee" ? std::optional<std::int64_t>(census.max_d_lee) : table1_bound(row.params, col);
      if (auto it = notes.find(col); it != notes.end()) {
        cell.documented = true;
        cell.note = it->second;
      }
      row.cells.push_back(std::move(cell));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace leecodes
