#include "charnum/cache.hpp"
#include "charnum/chow_blowup.hpp"
#include "charnum/errors.hpp"
#include "charnum/gw_rational.hpp"
#include "charnum/nodal.hpp"
#include "charnum/rr2.hpp"
#include "charnum/special_tangent.hpp"
#include "charnum/tables.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace charnum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitInvariant = 3;

struct CountOptions {
  std::string kind;
  int r = 0;
  std::string degrees;
  std::string delta;
  std::string g1;
  std::string g2;
  std::string nodes = "0,0";
  std::string codims;
  int mark = 0;
  int wtang = 0;
  bool unordered = false;
};

struct TableOptions {
  int id = 0;
  bool verify = false;
  std::string column;
  std::string format = "text";
  int threads = 1;
};

struct ChowOptions {
  int r = 0;
  bool integrate = false;
  std::string expression;
};

std::vector<int> int_list(const std::string& s, std::size_t want, const char* flag) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoi(part));
  if (want != 0 && out.size() != want)
    throw std::invalid_argument(std::string(flag) + " expects " + std::to_string(want) +
                                " comma-separated values");
  return out;
}

Rational hyperplane_factor(int degree, int hyperplanes) {
  Rational f = 1;
  for (int i = 0; i < hyperplanes; ++i) f *= degree;
  return f;
}

int run_count(const CountOptions& o) {
  const int r = o.r;
  if (o.kind == "gw") {
    const auto codims = int_list(o.codims, 0, "--codims");
    const int d = std::stoi(o.degrees);
    std::cout << to_string(gw_incidence(r, d, codims)) << "\n";
    return kExitOk;
  }
  if (o.kind == "rr2") {
    const auto ds = int_list(o.degrees, 2, "--d");
    const auto nodes = int_list(o.nodes, 2, "--nodes");
    const auto p1 = parse_constraint(o.g1, r);
    const auto p2 = parse_constraint(o.g2, r);
    Rational v = rr2_count(r, ds[0], p1.constraint, ds[1], p2.constraint, nodes[0], nodes[1],
                           o.unordered);
    v *= hyperplane_factor(ds[0], p1.hyperplanes) * hyperplane_factor(ds[1], p2.hyperplanes);
    std::cout << to_string(v) << "\n";
    return kExitOk;
  }
  const int d = std::stoi(o.degrees);
  const auto parsed = parse_constraint(o.delta, r);
  const Rational f = hyperplane_factor(d, parsed.hyperplanes);
  Rational v;
  if (o.kind == "rational") {
    v = rational_char(r, d, parsed.constraint);
  } else if (o.kind == "w") {
    v = w_count(r, d, parsed.constraint, {o.mark, o.wtang});
  } else if (o.kind == "nodal") {
    v = nodal_char(r, d, parsed.constraint);
  } else if (o.kind == "elliptic") {
    v = elliptic_fixed_j(r, d, parsed.constraint);
  } else {
    throw std::invalid_argument("unknown count kind " + o.kind);
  }
  std::cout << to_string(v * f) << "\n";
  return kExitOk;
}

std::string row_label(const TableFixture& fx, const TableCell& c) {
  if (fx.kind == TableKind::Nodal) return std::to_string(c.label);
  if (fx.kind == TableKind::Special) {
    const SpecialRow& s = fx.special[c.row];
    std::string t;
    for (int x : s.tuple) t += (t.empty() ? "" : ",") + std::to_string(x);
    return "d=" + std::to_string(s.degree) + " (" + t + ") (" + std::to_string(s.u) + "," +
           std::to_string(s.v) + ")";
  }
  const Rr2Row& s = fx.rr2[c.row];
  auto tuple = [](const std::vector<int>& v) {
    std::string t;
    for (int x : v) t += (t.empty() ? "" : ",") + std::to_string(x);
    return "(" + t + ")";
  };
  return "d=" + std::to_string(s.d1) + "," + std::to_string(s.d2) + " " + tuple(s.tuple1) + " " +
         tuple(s.tuple2) + " (" + std::to_string(s.k) + "," + std::to_string(s.l) + ")";
}

void print_table(const TableFixture& fx, const std::vector<TableCell>& cells,
                 std::optional<std::size_t> column, bool csv) {
  const auto names = table_columns(fx);
  std::vector<std::size_t> shown;
  for (std::size_t j = 0; j < names.size(); ++j)
    if (!column || *column == j) shown.push_back(j);
  const std::string head = fx.kind == TableKind::Nodal ? "tang" : "row";
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{head};
  for (std::size_t j : shown) header.push_back(names[j]);
  grid.push_back(header);
  std::size_t i = 0;
  const std::size_t rows = fx.kind == TableKind::Nodal   ? fx.nodal.size()
                           : fx.kind == TableKind::Rr2 ? fx.rr2.size()
                                                         : fx.special.size();
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<std::string> line(shown.size() + 1);
    bool any = false;
    for (; i < cells.size() && cells[i].row == row; ++i) {
      if (line[0].empty()) line[0] = row_label(fx, cells[i]);
      for (std::size_t s = 0; s < shown.size(); ++s)
        if (shown[s] == cells[i].column) line[s + 1] = to_string(cells[i].value);
      any = true;
    }
    if (any) grid.push_back(std::move(line));
  }
  if (csv) {
    for (const auto& line : grid) {
      for (std::size_t s = 0; s < line.size(); ++s) std::cout << (s ? "," : "") << line[s];
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : grid)
    for (std::size_t s = 0; s < line.size(); ++s) width[s] = std::max(width[s], line[s].size());
  for (const auto& line : grid) {
    for (std::size_t s = 0; s < line.size(); ++s)
      std::cout << (s ? "  " : "") << std::setw(static_cast<int>(width[s])) << line[s];
    std::cout << "\n";
  }
}

int report_mismatches(const TableFixture& fx, const std::vector<TableCell>& cells) {
  const auto names = table_columns(fx);
  int bad = 0;
  for (const TableCell& c : cells) {
    if (!c.expected || *c.expected == c.value) continue;
    ++bad;
    std::cerr << "table " << fx.id << " row " << row_label(fx, c) << " column "
              << names[c.column] << ": expected " << to_string(*c.expected) << ", got "
              << to_string(c.value) << "\n";
  }
  return bad;
}

int run_table(const TableOptions& o) {
  const TableFixture& fx = table_fixture(o.id);
  std::optional<std::size_t> column;
  if (!o.column.empty()) {
    column = find_column(fx, o.column);
    if (!column) throw std::invalid_argument("table " + std::to_string(o.id) + " has no column " +
                                             o.column);
  }
  const auto cells = compute_table(fx, column, o.threads);
  print_table(fx, cells, column, o.format == "csv");
  if (!o.verify) return kExitOk;
  const int bad = report_mismatches(fx, cells);
  if (bad > 0) {
    std::cerr << bad << " mismatching cells\n";
    return kExitMismatch;
  }
  std::cerr << "table " << o.id << ": " << cells.size() << " cells match\n";
  return kExitOk;
}

int run_chow(const ChowOptions& o) {
  const auto& ring = blowup_ring(o.r);
  const auto x = ring.parse(o.expression);
  if (o.integrate)
    std::cout << to_string(ring.integrate(x)) << "\n";
  else
    std::cout << ring.render(x) << "\n";
  return kExitOk;
}

int run_regress(int threads) {
  int failures = 0;
  for (int id = 1; id <= kTableCount; ++id) {
    const auto start = std::chrono::steady_clock::now();
    const TableFixture& fx = table_fixture(id);
    const auto cells = compute_table(fx, std::nullopt, threads);
    const int bad = report_mismatches(fx, cells);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "table " << std::setw(2) << id << ": " << (bad ? "FAIL" : "ok") << " ("
              << cells.size() << " cells, " << std::fixed << std::setprecision(2) << secs
              << "s)\n";
    failures += bad;
  }
  return failures ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic numbers of rational, nodal and elliptic curves in P^r"};
  app.require_subcommand(1);
  std::string cache_path;
  app.add_option("--cache", cache_path, "Persistent cache file (default: $CHARNUM_CACHE)");

  CountOptions count;
  auto* cmd_count = app.add_subcommand("count", "Compute one characteristic number");
  cmd_count->add_option("kind", count.kind, "rational | w | rr2 | nodal | elliptic | gw")
      ->required()
      ->check(CLI::IsMember({"rational", "w", "rr2", "nodal", "elliptic", "gw"}));
  cmd_count->add_option("--r", count.r, "Ambient dimension")->required()->check(CLI::Range(2, 5));
  cmd_count->add_option("--d", count.degrees, "Degree, or d1,d2 for rr2")->required();
  cmd_count->add_option("--delta", count.delta, "Constraint, e.g. t:1;c2:3;node:1");
  cmd_count->add_option("--g1", count.g1, "First component constraint (rr2)");
  cmd_count->add_option("--g2", count.g2, "Second component constraint (rr2)");
  cmd_count->add_option("--nodes", count.nodes, "A=B and C node codims k,l (rr2)");
  cmd_count->add_option("--codims", count.codims, "Marked codims, comma-separated (gw)");
  cmd_count->add_option("--mark", count.mark, "Codim of the condition on A (w)");
  cmd_count->add_option("--wtang", count.wtang, "Number of special tangents (w)");
  cmd_count->add_flag("--unordered", count.unordered, "Halve rr2 for unordered pairs");

  TableOptions table;
  auto* cmd_table = app.add_subcommand("table", "Regenerate a table");
  cmd_table->add_option("id", table.id, "Table number")->required()->check(CLI::Range(1, 18));
  cmd_table->add_flag("--verify", table.verify, "Compare with the embedded fixture");
  cmd_table->add_option("--col", table.column, "Single column, e.g. J or N_l");
  cmd_table->add_option("--format", table.format, "csv | text")
      ->check(CLI::IsMember({"csv", "text"}));
  cmd_table->add_option("--threads", table.threads, "Worker threads")->check(CLI::PositiveNumber);

  ChowOptions chow;
  auto* cmd_chow = app.add_subcommand("chow", "Normal form in the blowup Chow ring");
  cmd_chow->add_option("--r", chow.r, "Ambient dimension")->required()->check(CLI::Range(1, 5));
  cmd_chow->add_flag("--integrate", chow.integrate, "Integrate a top-degree class");
  cmd_chow->add_option("expression", chow.expression, "Polynomial in h, k, e")->required();

  int regress_threads = 1;
  auto* cmd_regress = app.add_subcommand("regress", "Verify every embedded table");
  cmd_regress->add_option("--threads", regress_threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cache_path.empty())
      if (auto env = cache_path_from_env()) cache_path = *env;
    if (!cache_path.empty()) global_cache().attach_file(cache_path);
    if (*cmd_count) return run_count(count);
    if (*cmd_table) return run_table(table);
    if (*cmd_chow) return run_chow(chow);
    if (*cmd_regress) return run_regress(regress_threads);
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
