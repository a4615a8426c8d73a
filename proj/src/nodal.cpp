#include "charnum/nodal.hpp"

#include "charnum/cache.hpp"
#include "charnum/errors.hpp"
#include "charnum/gw_rational.hpp"
#include "charnum/reducible.hpp"
#include "charnum/rr2.hpp"

#include <vector>

namespace charnum {

namespace engine {

namespace {

Constraint with_node(Constraint c, int k) {
  c.node_codim = k;
  return c;
}

int nodal_dimension(int r, int d, const Constraint& c) {
  return expected_dimension({FamilyKind::Nodal, r, d}, c);
}

// Marks the listed spaces on a degree-d component; the product of the
// hyperplane factors, 0 if some space is empty.
std::int64_t mark(Constraint& c, int r, int d, std::initializer_list<int> codims) {
  std::int64_t f = 1;
  for (int codim : codims) {
    f *= add_point_condition(c, r, codim, d);
    if (f == 0) return 0;
  }
  return f;
}

Rational nodal_point(int r, int d, Constraint c, int codim) {
  const std::int64_t f = add_point_condition(c, r, codim, d);
  if (f == 0) return 0;
  return Rational(f) * nodal_ord(r, d, c);
}

// Nodal component of degree d1 glued at C to a rational one of degree d2,
// C on a codim-l subspace.
Rational nr(int r, int d1, const Constraint& g1, int d2, const Constraint& g2, int l) {
  return fiber_product_count(
      r, l, [&](int a) { return nodal_point(r, d1, g1, a); },
      [&](int b) { return rat_point(r, d2, g2, b); });
}

Rational nr_marked(int r, int k, int d1, Constraint g1, std::initializer_list<int> on1, int d2,
                   Constraint g2, std::initializer_list<int> on2) {
  const std::int64_t f = mark(g1, r, d1, on1) * mark(g2, r, d2, on2);
  if (f == 0) return 0;
  return Rational(f) * nr(r, d1, with_node(g1, k), d2, g2, 0);
}

Rational rr2_marked(int r, int k, int d1, Constraint g1, std::initializer_list<int> on1, int d2,
                    Constraint g2, std::initializer_list<int> on2) {
  const std::int64_t f = mark(g1, r, d1, on1) * mark(g2, r, d2, on2);
  if (f == 0) return 0;
  return Rational(f) * rr2(r, d1, g1, d2, g2, k, 0);
}

Rational lower(int r, int d, const Constraint& parent, Constraint base,
               std::initializer_list<int> codims) {
  const std::int64_t f = mark(base, r, d, codims);
  if (f == 0) return 0;
  check_invariant(compare(base, parent) < 0,
                  "recursion did not lower the rank of " + format_constraint(parent));
  return Rational(f) * nodal_ord(r, d, base);
}

Rational tangency_step(int r, int d, const Constraint& delta) {
  const int k = delta.node_codim.value_or(0);
  Constraint reduced = delta;
  reduced.tangencies -= 1;
  Rational total = Rational(d - 1, d) * nodal_ord(r, d, reduced.with(2));
  const Constraint free = reduced.without_node();
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    const Rational glued =
        expand_tangencies(free, 0, r, [&](const Constraint& g1, const Constraint& g2, int l) {
          return nr(r, d1, with_node(g1, k), d2, g2, l);
        });
    const Rational twice = rr2_count_with_tangency(r, d1, d2, free, k, 0);
    total += Rational(d1 * d2, d) * (glued + twice);
  }
  return total;
}

}  // namespace

Rational nodal_incidence_step(int r, int d, const Constraint& delta, NodalChoice choice) {
  const int k = delta.node_codim.value_or(0);
  std::vector<int> codims;
  for (int i = 2; i <= r; ++i)
    for (int j = 0; j < delta.count(i); ++j) codims.push_back(i);
  check_invariant(codims.size() >= 3, "incidence recursion needs three spaces in " +
                                          format_constraint(delta));
  const std::size_t n = codims.size();
  const int cu = codims[0];
  const int cs = choice == NodalChoice::Smallest ? codims[1] : codims[n - 2];
  const int ct = choice == NodalChoice::Smallest ? codims[2] : codims[n - 1];
  const int cp = 1;
  const int cq = cu - 1;

  Constraint rest = delta;
  rest.remove(cu).remove(cs).remove(ct);
  rest.node_codim = k;

  Rational total = lower(r, d, delta, rest, {cq, cp + cs, ct}) +
                   lower(r, d, delta, rest, {cp, cs, cq + ct}) -
                   lower(r, d, delta, rest, {cp, cq, cs + ct});

  const Constraint free = rest.without_node();
  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    Rational acc = 0;
    for_each_split(free, [&](const Constraint& g1, const Constraint& g2, std::int64_t m) {
      Rational x = 0;
      x -= nr_marked(r, k, d1, g1, {cs, ct}, d2, g2, {cp, cq});
      x -= nr_marked(r, k, d1, g1, {cp, cq}, d2, g2, {cs, ct});
      x -= 2 * rr2_marked(r, k, d1, g1, {cp, cq}, d2, g2, {cs, ct});
      x += nr_marked(r, k, d1, g1, {cq, ct}, d2, g2, {cp, cs});
      x += nr_marked(r, k, d1, g1, {cp, cs}, d2, g2, {cq, ct});
      x += 2 * rr2_marked(r, k, d1, g1, {cp, cs}, d2, g2, {cq, ct});
      if (x != 0) acc += x * m;
    });
    total += acc;
  }
  return total;
}

Rational nodal_ord(int r, int d, const Constraint& delta) {
  const int k = delta.node_codim.value_or(0);
  if (d <= 1 || k < 0 || k > r) return 0;
  const Constraint c = with_node(delta, k);
  if (nodal_dimension(r, d, c) != 0) return 0;
  // double covers of lines move in positive-dimensional fibres unless
  // tangencies pin the branch points
  if (d == 2 && c.tangencies == 0) return 0;
  const CountKey key{CountTag::N, r, d, 0, c, {}};
  return global_cache().get_or_compute(key, [&] {
    return c.tangencies > 0 ? tangency_step(r, d, c)
                            : nodal_incidence_step(r, d, c, NodalChoice::Smallest);
  });
}

}  // namespace engine

namespace {

void check_nodal(int r, int d, const Constraint& delta) {
  if (r < 2 || r > kMaxDim) throw std::invalid_argument("r must lie in 2..5");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const int k = delta.node_codim.value_or(0);
  if (k < 0) throw std::invalid_argument("negative node codim");
  if (k > r) return;
  const int dim = expected_dimension({FamilyKind::Nodal, r, d}, delta);
  if (dim > 0)
    throw DimensionError("nodal count has positive expected dimension " + std::to_string(dim));
}

}  // namespace

Rational nodal_incidence(int r, int d, const Constraint& delta, NodalChoice choice) {
  check_nodal(r, d, delta);
  if (delta.tangencies != 0) throw std::invalid_argument("incidence recursion takes no tangency");
  Constraint c = delta;
  c.node_codim = delta.node_codim.value_or(0);
  if (d <= 2 || *c.node_codim > r) return 0;
  if (expected_dimension({FamilyKind::Nodal, r, d}, c) != 0) return 0;
  if (choice == NodalChoice::Smallest) return engine::nodal_ord(r, d, c) / 2;
  return engine::nodal_incidence_step(r, d, c, choice) / 2;
}

Rational nodal_char(int r, int d, const Constraint& delta) {
  check_nodal(r, d, delta);
  return engine::nodal_ord(r, d, delta) / 2;
}

Rational nodal_degree2_base(int r, const Constraint& delta) {
  return nodal_char(r, 2, delta);
}

Rational elliptic_fixed_j(int r, int d, const Constraint& delta) {
  if (delta.node_codim) throw std::invalid_argument("elliptic counts take no node condition");
  Constraint base = delta;
  base.node_codim = 0;
  check_nodal(r, d, base);
  const int m = delta.tangencies;
  Rational total = 0;
  for (int i = 0; i <= m && i <= r; ++i) {
    Constraint c = delta;
    c.tangencies = m - i;
    c.node_codim = i;
    total += Rational((Integer(1) << i) * binomial(m, i)) * engine::nodal_ord(r, d, c) / 2;
  }
  return total;
}

}  // namespace charnum
