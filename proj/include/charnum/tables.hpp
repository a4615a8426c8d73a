#pragma once

#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charnum {

inline constexpr int kTableCount = 18;

enum class TableKind { Special, Rr2, Nodal };

struct SpecialRow {
  int degree = 0;
  std::vector<int> tuple;
  int u = 0;
  int v = 0;
  Rational value;
};

struct Rr2Row {
  int d1 = 0;
  int d2 = 0;
  std::vector<int> tuple1;
  std::vector<int> tuple2;
  int k = 0;
  int l = 0;
  Rational value;
};

/// One line of a nodal table: entries for node codim 0..r, then J.  Blank
/// cells are absent.
struct NodalRow {
  int tangencies = 0;
  std::vector<std::optional<Rational>> values;
};

struct TableFixture {
  int id = 0;
  TableKind kind = TableKind::Special;
  int r = 0;
  /// Nodal tables only.
  int degree = 0;
  int points = 0;
  std::vector<SpecialRow> special;
  std::vector<Rr2Row> rr2;
  std::vector<NodalRow> nodal;
};

/// Raw fixture text compiled into the binary; empty for unknown ids.
std::string_view embedded_fixture(int id);

TableFixture parse_fixture(int id, std::string_view text);

/// Parsed embedded fixture; throws std::out_of_range for ids outside 1..18.
const TableFixture& table_fixture(int id);

/// Column names of a table: "value" for Tables 1-6, otherwise N plus one
/// name per node codim (N_f, N_b, N_s, N_l, N_p as the node space shrinks)
/// and J.
std::vector<std::string> table_columns(const TableFixture& fx);

/// Column index for a user-supplied name; accepts N_l, Nl, nl.
std::optional<std::size_t> find_column(const TableFixture& fx, std::string_view name);

struct TableCell {
  std::size_t row = 0;
  std::size_t column = 0;
  /// Row label: tangency count for nodal tables, 1-based line otherwise.
  int label = 0;
  std::optional<Rational> expected;
  Rational value;
};

/// Constraint of a nodal cell: t tangencies, the table's points, codim-2
/// incidences filling the dimension, node on codim k.  nullopt for blank
/// cells.
std::optional<Constraint> nodal_cell_constraint(const TableFixture& fx, int t, int k);

/// Computes every non-blank cell, optionally a single column, spreading the
/// cells over `threads` workers.  Output order is row-major.
std::vector<TableCell> compute_table(const TableFixture& fx,
                                     std::optional<std::size_t> column = std::nullopt,
                                     int threads = 1);

}  // namespace charnum
