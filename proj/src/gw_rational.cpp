#include "charnum/gw_rational.hpp"

#include "charnum/cache.hpp"
#include "charnum/errors.hpp"
#include "charnum/reducible.hpp"

#include <algorithm>

namespace charnum {

std::vector<DivisorTerm> tangency_divisor(int d) {
  std::vector<DivisorTerm> out;
  out.push_back({DivisorTerm::Kind::H, Rational(d - 1, d)});
  for (int d1 = 1; d1 < d; ++d1)
    out.push_back({DivisorTerm::Kind::KBoundary, Rational(d1 * (d - d1), 2 * d), d1, d - d1});
  return out;
}

std::vector<DivisorTerm> special_tangent_divisor(int d) {
  std::vector<DivisorTerm> out;
  out.push_back({DivisorTerm::Kind::LMark, Rational(2) - Rational(2, d)});
  out.push_back({DivisorTerm::Kind::H, Rational(1, d * d)});
  for (int j = 1; j < d; ++j)
    out.push_back({DivisorTerm::Kind::KMarked, Rational((d - j) * (d - j), d * d), j, d - j});
  return out;
}

std::vector<DivisorTerm> excess_divisor(int d) {
  std::vector<DivisorTerm> out;
  for (int d1 = 1; d1 < d; ++d1)
    out.push_back({DivisorTerm::Kind::Excess, Rational(-d1 * (d - d1), d * d), d1, d - d1});
  return out;
}

namespace engine {

namespace {

int rational_dimension(int r, int d, const Constraint& c) {
  return expected_dimension({FamilyKind::Rational, r, d}, c);
}

Rational incidence_only(int r, int d, const Constraint& c) {
  const int n = c.non_hyperplane_count();
  if (d == 1 && n == 2) return c.count(r) == 2 ? 1 : 0;
  if (n < 3) return 0;

  std::vector<int> codims;
  for (int i = 2; i <= r; ++i)
    for (int j = 0; j < c.count(i); ++j) codims.push_back(i);
  const int a1 = codims[0];
  const int a2 = codims[1];
  const int a3 = codims[2];
  Constraint rest = c;
  rest.remove(a1).remove(a2).remove(a3);

  Rational total = rat_points(r, d, rest, {a1 - 1, a2, a3 + 1});
  total += Rational(d) * rat_points(r, d, rest, {a1 + a2 - 1, a3});
  total -= Rational(d) * rat_points(r, d, rest, {a1 - 1, a2 + a3});

  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    for_each_split(rest, [&](const Constraint& g1, const Constraint& g2, std::int64_t m) {
      Rational acc = 0;
      for (int e = 0; e <= r; ++e) {
        const int f = r - e;
        const Rational x = rat_points(r, d1, g1, {a1 - 1, a2, e});
        if (x != 0) acc += Rational(d2) * x * rat_points(r, d2, g2, {f, a3});
        const Rational y = rat_points(r, d1, g1, {a1 - 1, e});
        if (y != 0) acc -= Rational(d1) * y * rat_points(r, d2, g2, {f, a2, a3});
      }
      if (acc != 0) total += acc * m;
    });
  }
  return total;
}

Rational with_tangency(int r, int d, const Constraint& c) {
  Constraint reduced = c;
  reduced.tangencies -= 1;
  Rational total = 0;
  for (const DivisorTerm& term : tangency_divisor(d)) {
    if (term.kind == DivisorTerm::Kind::H) {
      total += term.coefficient * rat(r, d, reduced.with(2));
      continue;
    }
    if (term.d1 > term.d2) continue;
    const Rational mult = term.d1 == term.d2 ? Rational(1) : Rational(2);
    const int d1 = term.d1;
    const int d2 = term.d2;
    const Rational glued = expand_tangencies(
        reduced, 0, r, [&](const Constraint& g1, const Constraint& g2, int node) {
          return fiber_product_count(
              r, node, [&](int a) { return rat_point(r, d1, g1, a); },
              [&](int b) { return rat_point(r, d2, g2, b); });
        });
    total += mult * term.coefficient * glued;
  }
  return total;
}

}  // namespace

Rational rat(int r, int d, const Constraint& delta) {
  if (d < 1) return 0;
  if (rational_dimension(r, d, delta) != 0) return 0;
  Constraint c = delta;
  c.node_codim.reset();
  const CountKey key{CountTag::R, r, d, 0, c, {}};
  return global_cache().get_or_compute(key, [&] {
    return c.tangencies > 0 ? with_tangency(r, d, c) : incidence_only(r, d, c);
  });
}

Rational rat_point(int r, int d, Constraint delta, int codim) {
  const std::int64_t f = add_point_condition(delta, r, codim, d);
  if (f == 0) return 0;
  return Rational(f) * rat(r, d, delta);
}

Rational rat_points(int r, int d, Constraint delta, std::initializer_list<int> codims) {
  std::int64_t f = 1;
  for (int codim : codims) {
    f *= add_point_condition(delta, r, codim, d);
    if (f == 0) return 0;
  }
  return Rational(f) * rat(r, d, delta);
}

}  // namespace engine

namespace {

void check_dimension(int dim, const char* what) {
  if (dim > 0)
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(dim) +
                         " is positive, the count is not finite");
}

void check_ambient(int r, int d) {
  if (r < 2 || r > kMaxDim) throw std::invalid_argument("r must lie in 2..5");
  if (d < 1) throw std::invalid_argument("degree must be positive");
}

}  // namespace

Rational gw_incidence(int r, int d, std::span<const int> codims) {
  check_ambient(r, d);
  Constraint c;
  std::int64_t factor = 1;
  for (int codim : codims) {
    if (codim < 1 || codim > r) throw std::invalid_argument("marked codim outside 1..r");
    factor *= add_point_condition(c, r, codim, d);
  }
  // a hyperplane marking adds one dimension and cuts one
  const int dim = expected_dimension({FamilyKind::Rational, r, d}, c);
  check_dimension(dim, "gw_incidence");
  if (dim < 0) return 0;
  return Rational(factor) * engine::rat(r, d, c);
}

Rational rational_char(int r, int d, const Constraint& delta) {
  check_ambient(r, d);
  if (delta.node_codim) throw std::invalid_argument("rational_char takes no node condition");
  const int dim = expected_dimension({FamilyKind::Rational, r, d}, delta);
  check_dimension(dim, "rational_char");
  return engine::rat(r, d, delta);
}

Rational marked_special_interface(int r, int d, const Constraint& delta, int u, int v) {
  check_ambient(r, d);
  if (v != 0) throw std::invalid_argument("special tangent conditions go through w_count");
  if (u < 0) throw std::invalid_argument("negative marked codim");
  if (u > r) return 0;
  const int dim = expected_dimension({FamilyKind::SpecialTangent, r, d, u, 0}, delta);
  check_dimension(dim, "marked count");
  return engine::rat_point(r, d, delta, u);
}

}  // namespace charnum
