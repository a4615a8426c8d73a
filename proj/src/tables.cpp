#include "charnum/tables.hpp"

#include "charnum/nodal.hpp"
#include "charnum/rr2.hpp"
#include "charnum/special_tangent.hpp"

#include <array>
#include <atomic>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace charnum {

namespace {

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoi(part));
  return out;
}

std::runtime_error bad_fixture(int id, int line, const std::string& what) {
  return std::runtime_error("fixture " + std::to_string(id) + " line " + std::to_string(line) +
                            ": " + what);
}

std::string normalize_name(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (ch != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return out;
}

}  // namespace

TableFixture parse_fixture(int id, std::string_view text) {
  TableFixture fx;
  fx.id = id;
  std::stringstream in{std::string(text)};
  std::string line;
  int n = 0;
  bool have_kind = false;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ls(line);
    std::string head;
    ls >> head;
    try {
      if (head == "kind") {
        std::string k;
        ls >> k;
        if (k == "special") fx.kind = TableKind::Special;
        else if (k == "rr2") fx.kind = TableKind::Rr2;
        else if (k == "nodal") fx.kind = TableKind::Nodal;
        else throw bad_fixture(id, n, "unknown kind " + k);
        have_kind = true;
      } else if (head == "r") {
        ls >> fx.r;
      } else if (head == "degree") {
        ls >> fx.degree;
      } else if (head == "points") {
        ls >> fx.points;
      } else if (!have_kind) {
        throw bad_fixture(id, n, "data before kind");
      } else if (fx.kind == TableKind::Special) {
        SpecialRow row;
        std::string tuple, value;
        row.degree = std::stoi(head);
        ls >> tuple >> row.u >> row.v >> value;
        row.tuple = parse_tuple(tuple);
        row.value = parse_rational(value);
        fx.special.push_back(std::move(row));
      } else if (fx.kind == TableKind::Rr2) {
        Rr2Row row;
        std::string t1, t2, value;
        row.d1 = std::stoi(head);
        ls >> row.d2 >> t1 >> t2 >> row.k >> row.l >> value;
        row.tuple1 = parse_tuple(t1);
        row.tuple2 = parse_tuple(t2);
        row.value = parse_rational(value);
        fx.rr2.push_back(std::move(row));
      } else {
        NodalRow row;
        row.tangencies = std::stoi(head);
        std::string cell;
        while (ls >> cell) {
          if (cell == "-") row.values.emplace_back();
          else row.values.emplace_back(parse_rational(cell));
        }
        if (static_cast<int>(row.values.size()) != fx.r + 2)
          throw bad_fixture(id, n, "expected " + std::to_string(fx.r + 2) + " cells");
        fx.nodal.push_back(std::move(row));
      }
    } catch (const std::invalid_argument& e) {
      throw bad_fixture(id, n, e.what());
    }
  }
  if (!have_kind) throw bad_fixture(id, n, "missing kind");
  if (fx.r < 2 || fx.r > kMaxDim) throw bad_fixture(id, n, "r outside 2..5");
  return fx;
}

const TableFixture& table_fixture(int id) {
  if (id < 1 || id > kTableCount) throw std::out_of_range("table id must lie in 1..18");
  static std::array<TableFixture, kTableCount + 1> tables;
  static std::array<std::once_flag, kTableCount + 1> flags;
  const auto i = static_cast<std::size_t>(id);
  std::call_once(flags[i], [&] { tables[i] = parse_fixture(id, embedded_fixture(id)); });
  return tables[i];
}

std::vector<std::string> table_columns(const TableFixture& fx) {
  if (fx.kind != TableKind::Nodal) return {"value"};
  static const char* by_dim[] = {"N_p", "N_l", "N_s", "N_b", "N_f"};
  std::vector<std::string> out{"N"};
  for (int k = 1; k <= fx.r; ++k) out.emplace_back(by_dim[fx.r - k]);
  out.emplace_back("J");
  return out;
}

std::optional<std::size_t> find_column(const TableFixture& fx, std::string_view name) {
  const auto cols = table_columns(fx);
  const std::string want = normalize_name(name);
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (normalize_name(cols[i]) == want) return i;
  return std::nullopt;
}

std::optional<Constraint> nodal_cell_constraint(const TableFixture& fx, int t, int k) {
  const int r = fx.r;
  const int fill = (r + 1) * fx.degree - 1 - fx.points * (r - 1) - t - k;
  if (fill < 0 || t < 0 || k < 0 || k > r) return std::nullopt;
  Constraint c;
  c.tangencies = t;
  c.add(2, fill);
  c.add(r, fx.points);
  c.node_codim = k;
  return c;
}

namespace {

Rational evaluate(const TableFixture& fx, std::size_t row, std::size_t col) {
  const int r = fx.r;
  switch (fx.kind) {
    case TableKind::Special: {
      const SpecialRow& s = fx.special[row];
      return w_count(r, s.degree, from_codim2_tuple(s.tuple, r), {s.u, s.v});
    }
    case TableKind::Rr2: {
      const Rr2Row& s = fx.rr2[row];
      return rr2_count(r, s.d1, from_codim2_tuple(s.tuple1, r), s.d2,
                       from_codim2_tuple(s.tuple2, r), s.k, s.l);
    }
    case TableKind::Nodal: {
      const int t = fx.nodal[row].tangencies;
      if (static_cast<int>(col) == r + 1) {
        Constraint c = *nodal_cell_constraint(fx, t, 0);
        c.node_codim.reset();
        return elliptic_fixed_j(r, fx.degree, c);
      }
      return nodal_char(r, fx.degree, *nodal_cell_constraint(fx, t, static_cast<int>(col)));
    }
  }
  return 0;
}

}  // namespace

std::vector<TableCell> compute_table(const TableFixture& fx, std::optional<std::size_t> column,
                                     int threads) {
  std::vector<TableCell> cells;
  if (fx.kind == TableKind::Nodal) {
    for (std::size_t i = 0; i < fx.nodal.size(); ++i) {
      const NodalRow& row = fx.nodal[i];
      for (std::size_t j = 0; j < row.values.size(); ++j) {
        if (column && *column != j) continue;
        const bool is_j = static_cast<int>(j) == fx.r + 1;
        if (!is_j && !nodal_cell_constraint(fx, row.tangencies, static_cast<int>(j))) continue;
        cells.push_back({i, j, row.tangencies, row.values[j], 0});
      }
    }
  } else {
    const std::size_t rows = fx.kind == TableKind::Special ? fx.special.size() : fx.rr2.size();
    for (std::size_t i = 0; i < rows; ++i) {
      if (column && *column != 0) continue;
      const Rational expected =
          fx.kind == TableKind::Special ? fx.special[i].value : fx.rr2[i].value;
      cells.push_back({i, 0, static_cast<int>(i) + 1, expected, 0});
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        cells[i].value = evaluate(fx, cells[i].row, cells[i].column);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::max(1, threads);
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return cells;
}

}  // namespace charnum
