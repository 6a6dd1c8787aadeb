// Command-line front end: bounds, inspection, constructions, census runs and the
// Z/4 table / bound-curve reproductions.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leecodes/bounds.hpp"
#include "leecodes/constructions.hpp"
#include "leecodes/equivalence.hpp"
#include "leecodes/reproduction.hpp"
#include "leecodes/search.hpp"

using namespace leecodes;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitGolden = 3;

Modulus modulus_from_q(std::int64_t q) {
  if (q < 2) throw InputError("q must be a prime power >= 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int s = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++s;
  }
  if (r != 1) throw InputError(std::to_string(q) + " is not a prime power");
  return Modulus(p, s);
}

std::string rows_str(const CodeMatrix& g) {
  std::ostringstream out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g.at(r, c);
    out << '\n';
  }
  if (g.rows() == 0) out << "  (none)\n";
  return out.str();
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

LinearCode load_code(const std::string& path) {
  if (path == "-") return LinearCode::from_generator(read_code_matrix(std::cin));
  return LinearCode::from_generator(read_code_file(path));
}

// --- bounds -----------------------------------------------------------------

struct BoundsArgs {
  std::string file;
  std::int64_t p = 0;
  int s = 0;
  int n = 0;
  std::vector<int> subtype;
  std::vector<int> k;  // --k1 .. --k8
  std::optional<int> level;
  bool json = false;
};

void print_report(const BoundReport& r, bool as_json) {
  if (as_json) {
    json j;
    j["p"] = r.params.modulus.p();
    j["s"] = r.params.modulus.s();
    j["n"] = r.params.n;
    j["k"] = r.params.k.get_str();
    j["K"] = r.params.K;
    j["k1"] = r.params.k1;
    if (r.params.ell) j["level"] = *r.params.ell;
    if (r.d_lee) j["d_lee"] = *r.d_lee;
    j["bounds"] = json::array();
    for (const auto& e : r.entries) {
      json b{{"id", e.id}, {"label", e.label}, {"applicable", e.applicable}};
      if (e.applicable) {
        b["value"] = e.value.get_str();
        b["max_d_lee"] = e.integer;
        if (e.stated) b["stated"] = *e.stated;
        if (e.attained) b["attained"] = *e.attained;
      }
      j["bounds"].push_back(b);
    }
    std::cout << j.dump(2) << '\n';
    return;
  }
  const auto& c = r.params;
  std::cout << c.modulus.name() << "  n=" << c.n << "  k=" << c.k.get_str() << "  K=" << c.K << "  k1=" << c.k1;
  if (c.ell) std::cout << "  level=" << *c.ell;
  if (r.d_lee) std::cout << "  d_L=" << *r.d_lee;
  std::cout << '\n';
  std::cout << std::left;
  for (const auto& e : r.entries) {
    std::cout << "  " << std::setw(20) << e.id << std::setw(38) << e.label;
    if (!e.applicable) {
      std::cout << "-\n";
      continue;
    }
    std::cout << "max d_L " << std::setw(8) << e.integer << " value " << e.value.get_str();
    if (e.stated) std::cout << "  (stated " << *e.stated << ")";
    if (e.attained) std::cout << (*e.attained ? "  attained" : "  not attained");
    std::cout << '\n';
  }
}

int run_bounds(const BoundsArgs& a) {
  if (!a.file.empty()) {
    const LinearCode code = load_code(a.file);
    if (code.is_trivial()) throw InputError("the zero code has no minimum distance");
    print_report(evaluate_bounds(code), a.json);
    return kExitOk;
  }
  if (a.p == 0 || a.s == 0 || a.n == 0) throw InputError("bounds needs --file or all of --p, --s, --n");
  const Modulus m(a.p, a.s);
  Subtype st = a.subtype;
  if (st.empty()) {
    st.assign(static_cast<std::size_t>(a.s), 0);
    for (std::size_t i = 0; i < a.k.size(); ++i) {
      if (a.k[i] == 0) continue;
      if (i >= st.size()) throw InputError("--k" + std::to_string(i + 1) + " exceeds s");
      st[i] = a.k[i];
    }
  }
  CodeParams params = CodeParams::from_subtype(m, a.n, st);
  params.ell = a.level;
  print_report(evaluate_bounds(params), a.json);
  return kExitOk;
}

// --- inspect ----------------------------------------------------------------

int run_inspect(const std::string& path, std::uint64_t budget) {
  const LinearCode c = load_code(path);
  const Modulus& m = c.modulus();
  std::cout << "ring            " << m.name() << '\n';
  std::cout << "length          " << c.length() << '\n';
  if (c.is_trivial()) {
    std::cout << "trivial code: the zero code has no minimum distance\n";
    return kExitOk;
  }
  check_codeword_budget(c, budget);
  std::cout << "type k          " << c.type().get_str() << '\n';
  std::cout << "subtype         (" << join(c.subtype()) << ")\n";
  std::cout << "rank K          " << c.rank() << '\n';
  std::cout << "free rank k1    " << c.free_rank() << (c.is_free() ? "  (free)" : "") << '\n';
  std::cout << "|C|             " << c.cardinality().get_str() << '\n';
  std::cout << "support subtype (" << join(c.support_subtype().counts) << ")\n";
  std::cout << "generator\n" << rows_str(c.generator());
  std::cout << "socle generator\n" << rows_str(c.socle().generator());
  std::cout << "dual generator\n" << rows_str(c.parity_check());
  std::cout << "d_H             " << c.min_hamming_distance() << '\n';
  std::cout << "d_L             " << c.min_lee_distance() << '\n';
  std::cout << "average weight  " << c.average_lee_weight().get_str() << '\n';
  if (auto w = c.lee_equidistant_weight())
    std::cout << "Lee-equidistant yes, weight " << *w << '\n';
  else
    std::cout << "Lee-equidistant no\n";
  std::cout << "MDS socle       " << (verify_mds_socle(c) ? "yes" : "no") << '\n';
  return kExitOk;
}

// --- construct --------------------------------------------------------------

void emit_code(const std::string& title, const LinearCode& c, std::optional<std::int64_t> predicted) {
  std::cout << "# " << title << '\n';
  write_code_matrix(std::cout, c.generator());
  const auto w = c.lee_equidistant_weight();
  std::cout << "# subtype (" << join(c.subtype()) << "), support subtype (" << join(c.support_subtype().counts)
            << ")\n";
  std::cout << "# d_L " << c.min_lee_distance() << ", Lee-equidistant " << (w ? "yes" : "no");
  if (w) std::cout << ", weight " << *w;
  if (predicted) std::cout << ", predicted weight " << *predicted << (w == predicted ? " (ok)" : " (MISMATCH)");
  std::cout << '\n';
}

int run_construct_equidistant(std::int64_t p, int s, int i, int rank, int ell) {
  const EquidistantSpec spec{Modulus(p, s), i, rank};
  LinearCode c = rank == 1 ? equidistant_rank1(spec) : equidistant_rank2(spec);
  std::int64_t predicted = spec.predicted_weight();
  if (ell > 1) {
    c = c.replicate(ell);
    predicted *= ell;
  }
  const std::string title = "rank-" + std::to_string(rank) + " Lee-equidistant code over " + spec.modulus.name() +
                            ", level " + std::to_string(i) + (ell > 1 ? ", " + std::to_string(ell) + "-fold" : "");
  emit_code(title, c, predicted);
  return kExitOk;
}

int run_construct_mld(std::int64_t p, int s, int n) {
  const auto catalog = catalog_mld(Modulus(p, s), n);
  if (catalog.empty()) throw InputError("no catalogued optimal code for these parameters");
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i) std::cout << '\n';
    emit_code(catalog[i].name, catalog[i].code, std::nullopt);
  }
  return kExitOk;
}

// --- census / attaining / characterize --------------------------------------

struct SpaceArgs {
  std::int64_t p = 0;
  int s = 0;
  int n = 0;
  std::vector<int> subtype;
  std::string strategy = "systematic";
  std::uint64_t budget = kDefaultCensusBudget;
  unsigned threads = 0;
};

SearchSpace make_space(const SpaceArgs& a) {
  return SearchSpace(Modulus(a.p, a.s), a.n, a.subtype, parse_strategy(a.strategy));
}

int run_census(const SpaceArgs& a) {
  CensusOptions opts{a.budget, a.threads, true};
  std::cout << max_lee_distance_census(make_space(a), opts).to_json(2) << '\n';
  return kExitOk;
}

int run_attaining(const SpaceArgs& a, const std::string& bound) {
  CensusOptions opts{a.budget, a.threads, true};
  const auto codes = find_attaining_codes(make_space(a), bound, opts);
  std::cout << "# " << codes.size() << " signed-permutation classes attaining " << bound << '\n';
  for (const auto& c : codes) {
    std::cout << '\n';
    write_code_matrix(std::cout, c.generator());
    std::cout << "# d_L " << c.min_lee_distance() << '\n';
  }
  return kExitOk;
}

int run_characterize(const std::string& id, const std::vector<std::int64_t>& qs, int n_max, const std::string& strategy,
                     std::uint64_t budget, unsigned threads, bool as_json) {
  CharacterizationRange range = default_range(id);
  if (!qs.empty()) {
    range.moduli.clear();
    for (auto q : qs) range.moduli.push_back(modulus_from_q(q));
  }
  if (n_max > 0) range.n_max = n_max;
  if (!strategy.empty()) range.strategy = parse_strategy(strategy);
  range.options.budget = budget;
  range.options.threads = threads;
  const CharacterizationReport r = check_characterization(id, range);
  if (as_json) {
    std::cout << r.to_json(2) << '\n';
    return kExitOk;
  }
  std::cout << r.id << ": " << r.description << (r.necessary_only ? " (necessary conditions)" : "") << '\n';
  for (const auto& m : r.per_modulus) {
    std::cout << "  " << std::left << std::setw(8) << m.modulus.name() << " candidates " << std::setw(9)
              << m.candidates << " attaining " << std::setw(7) << m.attaining << " missing " << std::setw(5)
              << m.missing << " extra " << std::setw(6) << m.extra << ' ' << m.verdict() << '\n';
    for (const auto& c : m.extra_examples) {
      std::cout << "    extra:";
      for (const auto& row : c.generator().to_rows()) {
        std::cout << " (";
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << ')';
      }
      std::cout << "  d_L " << c.min_lee_distance() << '\n';
    }
    for (const auto& c : m.missing_examples) {
      std::cout << "    missing:";
      for (const auto& row : c.generator().to_rows()) {
        std::cout << " (";
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << ')';
      }
      std::cout << "  d_L " << c.min_lee_distance() << '\n';
    }
  }
  std::cout << "verdict: " << r.verdict() << '\n';
  return kExitOk;
}

// --- table / figure ---------------------------------------------------------

int run_table1(bool csv_only, unsigned threads) {
  CensusOptions opts;
  opts.threads = threads;
  const Table1Report r = reproduce_table1(opts);
  std::cout << r.csv();
  if (!csv_only) std::cout << '\n' << r.mismatch_report();
  return r.undocumented_mismatches().empty() ? kExitOk : kExitGolden;
}

int run_figure(int id, bool check) {
  if (!check) {
    std::cout << figure_csv(id);
    return kExitOk;
  }
  const auto cmp = compare_figure(id);
  for (const auto& m : cmp.mismatches) std::cout << m << '\n';
  std::cout << "figure " << id << ": " << cmp.compared - static_cast<int>(cmp.mismatches.size()) << "/" << cmp.compared
            << " points match\n";
  return cmp.mismatches.empty() ? kExitOk : kExitGolden;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear codes over Z/p^s Z in the Lee metric"};
  app.require_subcommand(1);

  BoundsArgs ba;
  ba.k.assign(8, 0);
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound for given parameters or a code file");
  bounds->add_option("--file", ba.file, "Code file (text format; '-' reads stdin)");
  bounds->add_option("--p", ba.p, "Prime p");
  bounds->add_option("--s", ba.s, "Exponent s");
  bounds->add_option("--n", ba.n, "Length n");
  bounds->add_option("--subtype", ba.subtype, "Subtype k_1,...,k_s")->delimiter(',');
  for (int i = 0; i < 8; ++i)
    bounds->add_option("--k" + std::to_string(i + 1), ba.k[static_cast<std::size_t>(i)],
                       "Subtype entry k_" + std::to_string(i + 1));
  bounds->add_option("--level", ba.level, "Level ell for the level-specific rank bound");
  bounds->add_flag("--json", ba.json, "JSON output");

  std::string inspect_file;
  std::uint64_t inspect_budget = kDefaultCodewordBudget;
  auto* inspect = app.add_subcommand("inspect", "Structural report for a code file");
  inspect->add_option("file", inspect_file, "Code file ('-' reads stdin)")->required();
  inspect->add_option("--budget", inspect_budget, "Maximum codewords to enumerate");

  auto* construct = app.add_subcommand("construct", "Emit a constructed code in text format");
  construct->require_subcommand(1);
  std::int64_t cp = 0;
  int cs = 0, ci = 1, crank = 1, cell = 1, cn = 0;
  auto* equi = construct->add_subcommand("equidistant", "Lee-equidistant code of rank 1 or 2 (p odd)");
  equi->add_option("--p", cp)->required();
  equi->add_option("--s", cs)->required();
  equi->add_option("--i", ci, "Level i in [1, s]")->required();
  equi->add_option("--rank", crank, "1 or 2")->check(CLI::IsMember({1, 2}));
  equi->add_option("--ell", cell, "Replication factor")->check(CLI::PositiveNumber);
  auto* mld = construct->add_subcommand("mld", "Catalogued codes meeting a Singleton-like Lee bound");
  mld->add_option("--p", cp)->required();
  mld->add_option("--s", cs)->required();
  mld->add_option("--n", cn)->required();

  SpaceArgs sa;
  auto add_space = [&sa](CLI::App* sub) {
    sub->add_option("--p", sa.p)->required();
    sub->add_option("--s", sa.s)->required();
    sub->add_option("--n", sa.n)->required();
    sub->add_option("--subtype", sa.subtype, "Subtype k_1,...,k_s")->delimiter(',')->required();
    sub->add_option("--strategy", sa.strategy, "systematic or reduced");
    sub->add_option("--budget", sa.budget, "Maximum candidate generators");
    sub->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");
  };
  auto* census = app.add_subcommand("census", "Exhaustive maximal-d_L census, JSON output");
  add_space(census);
  std::string bound_id;
  auto* attaining = app.add_subcommand("attaining", "All signed-permutation classes attaining a bound");
  add_space(attaining);
  attaining->add_option("--bound", bound_id, "Bound id")->required();

  std::string char_id, char_strategy;
  std::vector<std::int64_t> char_q;
  int char_n = 0;
  std::uint64_t char_budget = kDefaultCensusBudget;
  unsigned char_threads = 0;
  bool char_json = false;
  auto* characterize = app.add_subcommand("characterize", "Check a characterization against exhaustive search");
  characterize->add_option("id", char_id, "Characterization id")->required()->check(CLI::IsMember(characterization_ids()));
  characterize->add_option("--q", char_q, "Ring orders to check, e.g. 4,5,9")->delimiter(',');
  characterize->add_option("--n-max", char_n, "Largest length");
  characterize->add_option("--strategy", char_strategy, "systematic or reduced");
  characterize->add_option("--budget", char_budget, "Maximum candidates per search space");
  characterize->add_option("--threads", char_threads, "Worker threads (0 = all cores)");
  characterize->add_flag("--json", char_json, "JSON output");

  bool table_csv_only = false;
  unsigned table_threads = 0;
  auto* table1 = app.add_subcommand("table1", "Recompute the Z/4 comparison table and diff it against the reference");
  table1->add_flag("--csv-only", table_csv_only, "Omit the mismatch report");
  table1->add_option("--threads", table_threads, "Worker threads (0 = all cores)");

  int figure_id = 1;
  bool figure_check = false;
  auto* figure = app.add_subcommand("figure", "Bound curves for k_2 = 0..15 as CSV");
  figure->add_option("id", figure_id, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  figure->add_flag("--check", figure_check, "Compare against the reference coordinates instead of printing CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bounds) return run_bounds(ba);
    if (*inspect) return run_inspect(inspect_file, inspect_budget);
    if (*equi) return run_construct_equidistant(cp, cs, ci, crank, cell);
    if (*mld) return run_construct_mld(cp, cs, cn);
    if (*census) return run_census(sa);
    if (*attaining) return run_attaining(sa, bound_id);
    if (*characterize)
      return run_characterize(char_id, char_q, char_n, char_strategy, char_budget, char_threads, char_json);
    if (*table1) return run_table1(table_csv_only, table_threads);
    if (*figure) return run_figure(figure_id, figure_check);
  } catch (const BudgetError& e) {
    std::cerr << "budget refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
