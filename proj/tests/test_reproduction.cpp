#include <doctest.h>

#include "leecodes/reproduction.hpp"

using namespace leecodes;

TEST_CASE("figure spot values") {
  CHECK(figure_value(figure_spec(1), 5, "new_rank") == 1296);
  CHECK(figure_value(figure_spec(2), 15, "chiang_wolf_k1") == 299);
  CHECK(figure_value(figure_spec(3), 0, "wyner_graham") == 15624);
  CHECK(figure_value(figure_spec(2), 0, "new_rank") == 120);
  CHECK(figure_value(figure_spec(1), 0, "chiang_wolf_k1") == 671);
  CHECK(figure_value(figure_spec(1), 0, "shiromoto") == 1331);
  CHECK(figure_value(figure_spec(1), 0, "alderson_huntemann") == 1210);
  CHECK_THROWS_AS(figure_spec(4), InputError);
  CHECK_THROWS_AS(figure_value(figure_spec(1), 0, "plotkin"), InputError);
}

TEST_CASE("figures match the reference points") {
  std::size_t compared = 0;
  for (const auto& f : figure_specs()) {
    const auto cmp = compare_figure(f.id);
    CAPTURE(f.id);
    CHECK(cmp.mismatches.empty());
    compared += cmp.compared;
  }
  CHECK(compared == 240);
}

TEST_CASE("figure CSV is stable") {
  const auto csv = figure_csv(2);
  CHECK(csv == figure_csv(2));
  CHECK(csv.rfind("k2,bound_id,value\n0,chiang_wolf_k1,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 16 * 5);
}

TEST_CASE("table bound columns") {
  const Modulus z4(2, 2);
  const auto r1 = CodeParams::from_subtype(z4, 2, {0, 1});
  CHECK(table1_bound(r1, "singleton") == 4);
  CHECK(table1_bound(r1, "shiromoto") == 4);
  CHECK_FALSE(table1_bound(r1, "chiang_wolf").has_value());
  CHECK_FALSE(table1_bound(r1, "alderson_huntemann").has_value());
  CHECK_THROWS_AS(table1_bound(r1, "max_d_lee"), InputError);
}

TEST_CASE("table reproduction") {
  CensusOptions opts;
  opts.threads = 1;
  const auto rep = reproduce_table1(opts);
  REQUIRE(rep.rows.size() == 21);
  CHECK(rep.bound_violations() == 0);
  for (const auto& row : rep.rows) {
    CAPTURE(row.row);
    REQUIRE(row.cells.size() == table1_columns().size());
    CHECK(row.cells[0].column == "max_d_lee");
    CHECK(row.cells[0].matches());
  }
  // spot rows whose every column agrees
  for (int id : {1, 4, 5}) {
    CAPTURE(id);
    for (const auto& c : rep.rows[static_cast<std::size_t>(id - 1)].cells) CHECK(c.matches());
  }
  const auto csv = rep.csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
  CHECK(rep.mismatch_report().find("mismatches:") != std::string::npos);
}
