#include "charnum/cache.hpp"
#include "charnum/chow_blowup.hpp"
#include "charnum/gw_rational.hpp"
#include "charnum/nodal.hpp"
#include "charnum/rr2.hpp"
#include "charnum/special_tangent.hpp"
#include "charnum/tables.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace charnum;

namespace {

using Clock = std::chrono::steady_clock;
using Ring = BlowupRing<Rational>;

struct Report {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <class T>
  void equal(const Rational& got, const T& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << Rational(want);
    expect(got == Rational(want), s.str());
  }
};

int worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Constraint make(int t, std::initializer_list<std::pair<int, int>> inc) {
  Constraint c;
  c.tangencies = t;
  for (auto [codim, n] : inc) c.add(codim, n);
  return c;
}

void timed(Report& rep, const std::string& name, const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream s;
  s << name << " took " << secs << " s";
  rep.expect(secs < 1.0, s.str());
}

Report worked_examples() {
  Report rep;
  timed(rep, "conics tangent at a marked point", [&] {
    rep.equal(w_count(3, 2, make(0, {{3, 3}}), {2, 1}), 1, "conics through 3 points, A on a line");
  });
  timed(rep, "two special tangents", [&] {
    rep.equal(w_count(4, 2, make(0, {{2, 1}, {4, 3}}), {0, 2}), 2,
              "conics through 3 points and a plane in P^4");
  });
  timed(rep, "lines meeting twice", [&] {
    const Constraint g = make(0, {{2, 3}});
    rep.equal(rr2_count(3, 1, g, 1, g, 0, 0, true), 0, "pairs of lines meeting twice");
    const auto& ring = blowup_ring(3);
    const auto t1 = family_class(3, 1, g)->value;
    rep.expect(t1 == ring.parse("2(h^2k+hk^2) - 6h^2e + 2he^2"), "T1 = " + ring.render(t1));
    rep.equal(t1(ring.index_of({3, 0, 0})), 0, "alpha");
    rep.equal(t1(ring.index_of({2, 1, 0})), 2, "beta");
    rep.equal(t1(ring.index_of({1, 0, 2})), 2, "mu");
    rep.equal(t1(ring.index_of({2, 0, 1})), -6, "gamma");
  });
  timed(rep, "conic and cubic meeting twice", [&] {
    const Constraint g1 = make(0, {{2, 1}, {3, 1}, {4, 1}, {5, 1}});
    const Constraint g2 = make(0, {{2, 2}, {3, 1}, {4, 1}, {5, 2}});
    rep.equal(rr2_count(5, 2, g1, 3, g2, 1, 2), 956, "conic-cubic pairs in P^5");
    const auto& ring = blowup_ring(5);
    const auto t1 = family_class(5, 2, g1)->value;
    const auto t2 = family_class(5, 3, g2)->value;
    rep.expect(t1 == ring.parse("2h^4 + 6h^3k + 8h^2k^2 + 6hk^3 + 2k^4 - 42h^3e + 29h^2e^2 - "
                                "9he^3 + e^4"),
               "T1 = " + ring.render(t1));
    rep.expect(t2 == ring.parse("45h^3 + 88h^2k + 88hk^2 + 45k^3 - 308h^2e + 140he^2 - 23e^3"),
               "T2 = " + ring.render(t2));
  });
  return rep;
}

Report ring_relations() {
  Report rep;
  const char* printed[] = {
      "h + k",
      "3he - (h^2+hk+k^2)",
      "4he^2 - 6h^2e + (h^3 + h^2k + hk^2 + k^3)",
      "5he^3 - 10h^2e^2 + 5h^3e - (h^4 + h^3k + h^2k^2 + hk^3 + k^4)",
  };
  for (int r = 1; r <= 4; ++r) {
    const auto& ring = blowup_ring(r);
    const auto lhs = ring.power(ring.monomial(0, 0, 1), r);
    const auto rhs = ring.parse(printed[r - 1]);
    rep.expect(lhs == rhs, "r=" + std::to_string(r) + ": e^" + std::to_string(r) + " reduces to " +
                               ring.render(lhs) + ", printed " + ring.render(rhs) +
                               ", difference " + ring.render(lhs - rhs));
  }

  std::mt19937 rng(20240917);
  for (int r = 1; r <= 5; ++r) {
    const auto& ring = blowup_ring(r);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> pick(0, ring.size() - 1);
    auto random_class = [&] {
      auto x = ring.zero();
      for (int i = 0; i < 5; ++i) x(pick(rng)) += Rational(coeff(rng), 1 + i % 3);
      return x;
    };
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_class();
      const auto y = random_class();
      const auto z = random_class();
      const auto xy = ring.multiply(x, y);
      if (!(ring.multiply(xy, z) == ring.multiply(x, ring.multiply(y, z)))) ++bad;
      if (!(xy == ring.multiply(y, x))) ++bad;
      if (!(ring.multiply(x, y + z) == xy + ring.multiply(x, z))) ++bad;
      if (!(ring.multiply(xy, ring.one()) == xy)) ++bad;
      if (!(ring.parse(ring.render(xy)) == xy)) ++bad;
    }
    for (int i = 0; i < ring.size(); ++i) {
      const Monomial& m = ring.basis()[static_cast<std::size_t>(i)];
      auto unit = ring.zero();
      unit(i) = 1;
      if (!(ring.monomial(m.h, m.k, m.e) == unit)) ++bad;
    }
    rep.expect(bad == 0, "r=" + std::to_string(r) + ": " + std::to_string(bad) +
                             " ring law violations");
  }
  return rep;
}

std::string cell_name(const TableFixture& fx, const TableCell& cell) {
  const auto cols = table_columns(fx);
  std::ostringstream s;
  s << "table " << fx.id;
  if (fx.kind == TableKind::Nodal)
    s << " t=" << cell.label << " " << cols[cell.column];
  else
    s << " row " << cell.label;
  return s.str();
}

Report tables(int first, int last) {
  Report rep;
  for (int id = first; id <= last; ++id) {
    const TableFixture& fx = table_fixture(id);
    for (const TableCell& cell : compute_table(fx, std::nullopt, worker_count())) {
      if (!cell.expected) continue;
      rep.equal(cell.value, *cell.expected, cell_name(fx, cell));
    }
  }
  return rep;
}

Report j_consistency() {
  Report rep;
  for (int id = 7; id <= kTableCount; ++id) {
    const TableFixture& fx = table_fixture(id);
    const auto cells = compute_table(fx, fx.r + 1, worker_count());
    for (const TableCell& cell : cells) {
      const int t = cell.label;
      Rational sum = 0;
      for (int i = 0; i <= t && i <= fx.r; ++i) {
        const auto c = nodal_cell_constraint(fx, t - i, i);
        if (!c) continue;
        sum += Rational((Integer(1) << i) * binomial(t, i)) * nodal_char(fx.r, fx.degree, *c);
      }
      rep.equal(cell.value, sum, cell_name(fx, cell) + " against its node columns");
    }
  }
  return rep;
}

// Every multiset of codims 2..r with total cost `cost`, codim c costing c-1.
void for_each_incidence_set(int r, int cost, int min_codim, Constraint& c,
                            const std::function<void(const Constraint&)>& fn) {
  if (cost == 0) {
    fn(c);
    return;
  }
  for (int codim = min_codim; codim <= r; ++codim) {
    if (codim - 1 > cost) break;
    c.add(codim);
    for_each_incidence_set(r, cost - (codim - 1), codim, c, fn);
    c.remove(codim);
  }
}

Report route_equivalence() {
  Report rep;
  for (int r = 2; r <= 5; ++r)
    for (int d = 1; d <= 3; ++d)
      for (int v = 1; v <= std::min(3, r - 1); ++v)
        for (int u = 0; u <= r; ++u)
          for (int t = 0; t <= 2; ++t) {
            const int cost = (r + 1) * d + r - 2 - u - v - t;
            if (cost < 0) continue;
            Constraint c;
            c.tangencies = t;
            for_each_incidence_set(r, cost, 2, c, [&](const Constraint& delta) {
              std::ostringstream what;
              what << "r=" << r << " d=" << d << " " << format_constraint(delta) << " u=" << u
                   << " v=" << v;
              rep.equal(engine::w_lemma(r, d, delta, u, v), w_high_count(r, d, delta, u, v),
                        what.str());
            });
          }
  return rep;
}

Report choice_independence() {
  Report rep;
  auto compare = [&](int r, int d, const Constraint& c) {
    std::ostringstream what;
    what << "r=" << r << " d=" << d << " " << format_constraint(c);
    rep.equal(nodal_incidence(r, d, c, NodalChoice::Largest),
              nodal_incidence(r, d, c, NodalChoice::Smallest), what.str());
  };
  for (int k = 0; k <= 2; ++k) {
    Constraint cubic = make(0, {{2, 8 - k}});
    cubic.node_codim = k;
    compare(2, 3, cubic);
    Constraint quartic = make(0, {{2, 11 - k}});
    quartic.node_codim = k;
    compare(2, 4, quartic);
  }
  for (int k = 0; k <= 3; ++k)
    for (int points = 0; 2 * points <= 11 - k; ++points) {
      Constraint c = make(0, {{2, 11 - k - 2 * points}, {3, points}});
      c.node_codim = k;
      compare(3, 3, c);
    }
  return rep;
}

Report anchors() {
  Report rep;
  rep.equal(nodal_incidence(2, 3, make(0, {{2, 8}})), 12, "nodal plane cubics through 8 points");
  const Rational quartics = gw_incidence(2, 4, std::vector<int>(11, 2));
  rep.equal(quartics, 620, "rational plane quartics through 11 points");
  rep.equal(nodal_incidence(2, 4, make(0, {{2, 11}})), 3 * quartics,
            "nodal plane quartics through 11 points");
  rep.equal(nodal_incidence(2, 4, make(0, {{2, 11}})), 1860, "nodal plane quartics, printed");
  return rep;
}

}  // namespace

int main() {
  if (auto path = cache_path_from_env()) global_cache().attach_file(*path);

  struct Criterion {
    int id;
    const char* name;
    std::function<Report()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked examples", worked_examples},
      {2, "blowup ring relations and ring laws", ring_relations},
      {3, "special tangent tables 1-3", [] { return tables(1, 3); }},
      {4, "two-nodal tables 4-6", [] { return tables(4, 6); }},
      {5, "nodal and elliptic tables 7-18", [] { return tables(7, 18); }},
      {6, "J column against node columns", j_consistency},
      {7, "lemma and blowup routes agree", route_equivalence},
      {8, "incidence recursion choice independence", choice_independence},
      {9, "classical anchors", anchors},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Report rep;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      rep.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool ok = rep.failures.empty();
    if (!ok) ++failed;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << " ("
              << rep.checks << " checks, " << secs << " s)\n";
    const std::size_t shown = std::min<std::size_t>(rep.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << rep.failures[i] << "\n";
    if (rep.failures.size() > shown)
      std::cout << "    ... " << rep.failures.size() - shown << " more\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
