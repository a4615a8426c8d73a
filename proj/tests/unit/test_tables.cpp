#include "charnum/tables.hpp"

#include <doctest.h>

using namespace charnum;

TEST_SUITE("tables") {
  TEST_CASE("embedded fixtures parse") {
    for (int id = 1; id <= kTableCount; ++id) {
      CAPTURE(id);
      const TableFixture& fx = table_fixture(id);
      CHECK(fx.id == id);
      if (id <= 3) CHECK(fx.kind == TableKind::Special);
      else if (id <= 6) CHECK(fx.kind == TableKind::Rr2);
      else CHECK(fx.kind == TableKind::Nodal);
    }
    CHECK_THROWS_AS(table_fixture(0), std::out_of_range);
    CHECK_THROWS_AS(table_fixture(19), std::out_of_range);
  }

  TEST_CASE("malformed fixtures are rejected") {
    CHECK_THROWS(parse_fixture(1, "r 3\n3 1,2,3 3 1 34\n"));
    CHECK_THROWS(parse_fixture(1, "kind sideways\n"));
    CHECK_THROWS(parse_fixture(7, "kind nodal\nr 2\ndegree 2\n0 0 0\n"));
    const auto fx = parse_fixture(7, "kind nodal\nr 2\ndegree 2\n# t\n4 0 3/2 - 48\n");
    REQUIRE(fx.nodal.size() == 1);
    CHECK(fx.nodal[0].values[1] == Rational(3, 2));
    CHECK_FALSE(fx.nodal[0].values[2].has_value());
  }

  TEST_CASE("column names") {
    CHECK(table_columns(table_fixture(1)) == std::vector<std::string>{"value"});
    CHECK(table_columns(table_fixture(8)) == std::vector<std::string>{"N", "N_l", "N_p", "J"});
    CHECK(table_columns(table_fixture(11)) ==
          std::vector<std::string>{"N", "N_s", "N_l", "N_p", "J"});
    CHECK(table_columns(table_fixture(18)).size() == 7);
    CHECK(find_column(table_fixture(8), "nl") == 1);
    CHECK(find_column(table_fixture(8), "N_L") == 1);
    CHECK(find_column(table_fixture(8), "j") == 3);
    CHECK_FALSE(find_column(table_fixture(8), "N_s").has_value());
  }

  TEST_CASE("cell constraints") {
    const auto c = nodal_cell_constraint(table_fixture(8), 2, 1);
    REQUIRE(c.has_value());
    CHECK(c->tangencies == 2);
    CHECK(c->count(2) == 5);
    CHECK(c->node_codim == 1);
    CHECK_FALSE(nodal_cell_constraint(table_fixture(7), 5, 1).has_value());
  }

  TEST_CASE("small tables reproduce") {
    for (int id : {7, 8, 10}) {
      CAPTURE(id);
      for (const TableCell& cell : compute_table(table_fixture(id), std::nullopt, 2)) {
        CAPTURE(cell.label);
        CAPTURE(cell.column);
        REQUIRE(cell.expected.has_value());
        CHECK(*cell.expected == cell.value);
      }
    }
  }

  TEST_CASE("single column") {
    const auto cells = compute_table(table_fixture(8), 3);
    CHECK(cells.size() == table_fixture(8).nodal.size());
    for (const TableCell& cell : cells) CHECK(cell.column == 3);
  }
}
