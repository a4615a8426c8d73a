#include "charnum/special_tangent.hpp"

#include "charnum/cache.hpp"
#include "charnum/errors.hpp"
#include "charnum/gw_rational.hpp"
#include "charnum/reducible.hpp"
#include "charnum/nodal.hpp"
#include "charnum/rr2.hpp"

namespace charnum {

namespace engine {

namespace {

int special_dimension(int r, int d, const Constraint& c, int u, int v) {
  return expected_dimension({FamilyKind::SpecialTangent, r, d, u, v}, c);
}

// Count on a component whose connecting point carries a codim-a condition
// while A keeps (u, v).
Rational w_point(int r, int d, Constraint c, int a, int u, int v) {
  const std::int64_t f = add_point_condition(c, r, a, d);
  if (f == 0) return 0;
  return Rational(f) * w(r, d, c, u, v);
}

Rational blowup_route(int r, int d, const Constraint& c, int u, int v) {
  const auto cls = family_class(r, d, c);
  if (cls->codim + u + 1 + v != 2 * r) return 0;
  const auto& ring = blowup_ring(r);
  auto m = ring.multiply(ring.monomial(u, 0, 1),
                         ring.power(ring.parse("h+k-e"), v));
  Rational total = ring.integrate(ring.multiply(cls->value, m));
  // node pairs (A, C) lift to whole fibres of e over the node locus
  const int z = u + v - (r - 1);
  if (z >= 0 && z <= r) {
    Constraint nodal = c;
    nodal.node_codim = z;
    const Rational nodes = nodal_ord(r, d, nodal);
    if (nodes != 0) {
      const auto fibre = ring.multiply(ring.monomial(2 * r - 1 - v, 0, 1),
                                       ring.power(ring.parse("h+k-e"), v));
      total -= nodes * ring.integrate(fibre);
    }
  }
  return total;
}

}  // namespace

Rational w(int r, int d, const Constraint& delta, int u, int v) {
  if (d < 1 || u < 0 || u > r || v < 0) return 0;
  if (v > 2 * r - 2) return 0;
  if (special_dimension(r, d, delta, u, v) != 0) return 0;
  if (v == 0) return rat_point(r, d, delta, u);
  const CountKey key{CountTag::W, r, d, 0, delta, {}, u, v};
  return global_cache().get_or_compute(key, [&] {
    return v >= r - 1 ? blowup_route(r, d, delta, u, v) : w_lemma(r, d, delta, u, v);
  });
}

Rational w_lemma(int r, int d, const Constraint& delta, int u, int v) {
  check_invariant(v >= 1 && v <= 3,
                  "divisor route covers one to three special tangents, got " + std::to_string(v));
  Rational total = 0;
  for (const DivisorTerm& term : special_tangent_divisor(d)) {
    switch (term.kind) {
      case DivisorTerm::Kind::LMark:
        total += term.coefficient * w(r, d, delta, u + 1, v - 1);
        break;
      case DivisorTerm::Kind::H:
        total += term.coefficient * w(r, d, delta.with(2), u, v - 1);
        break;
      case DivisorTerm::Kind::KMarked: {
        const int j = term.d1;
        const int rest = term.d2;
        const Rational glued = expand_tangencies(
            delta, 0, r, [&](const Constraint& g1, const Constraint& g2, int node) {
              return fiber_product_count(
                  r, node, [&](int a) { return w_point(r, j, g1, a, u, v - 1); },
                  [&](int b) { return rat_point(r, rest, g2, b); });
            });
        total += term.coefficient * glued;
        break;
      }
      default:
        break;
    }
  }
  if (v < 2) return total;
  const int extra = v - 2;
  for (const DivisorTerm& term : excess_divisor(d)) {
    const int d1 = term.d1;
    const int d2 = term.d2;
    // A sits on a contracted component joining the two others, so its
    // condition lands on the common point.
    const Rational glued = expand_tangencies(
        delta, u, r, [&](const Constraint& g1, const Constraint& g2, int node) {
          if (extra == 0)
            return fiber_product_count(
                r, node, [&](int a) { return rat_point(r, d1, g1, a); },
                [&](int b) { return rat_point(r, d2, g2, b); });
          return fiber_product_count(
                     r, node, [&](int a) { return w(r, d1, g1, a, 1); },
                     [&](int b) { return rat_point(r, d2, g2, b); }) +
                 fiber_product_count(
                     r, node, [&](int a) { return rat_point(r, d1, g1, a); },
                     [&](int b) { return w(r, d2, g2, b, 1); });
        });
    total += term.coefficient * glued;
  }
  return total;
}

}  // namespace engine

namespace {

void validate(int r, int d, const Constraint& delta, int u, int v) {
  if (r < 2 || r > kMaxDim) throw std::invalid_argument("r must lie in 2..5");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (u < 0 || v < 0) throw std::invalid_argument("negative special class");
  if (delta.node_codim) throw std::invalid_argument("special tangent counts take no node");
  const int dim = expected_dimension({FamilyKind::SpecialTangent, r, d, u, v}, delta);
  if (dim > 0 && u <= r && v <= 2 * r - 2)
    throw DimensionError("special tangent count has positive expected dimension " +
                         std::to_string(dim));
}

}  // namespace

Rational w_count(int r, int d, const Constraint& delta, SpecialSpec spec) {
  validate(r, d, delta, spec.u, spec.v);
  return engine::w(r, d, delta, spec.u, spec.v);
}

Rational w1_count(int r, int d, const Constraint& delta, int u) {
  validate(r, d, delta, u, 1);
  if (r < 3) throw std::invalid_argument("one special tangent needs r >= 3");
  return engine::w_lemma(r, d, delta, u, 1);
}

Rational w2_count(int r, int d, const Constraint& delta, int u) {
  validate(r, d, delta, u, 2);
  if (r < 4) throw std::invalid_argument("two special tangents need r >= 4");
  return engine::w_lemma(r, d, delta, u, 2);
}

Rational w3_count(int r, int d, const Constraint& delta, int u) {
  validate(r, d, delta, u, 3);
  if (r < 5) throw std::invalid_argument("three special tangents need r >= 5");
  return engine::w_lemma(r, d, delta, u, 3);
}

Rational w_high_count(int r, int d, const Constraint& delta, int u, int v) {
  validate(r, d, delta, u, v);
  if (u > r || v > 2 * r - 2) return 0;
  if (expected_dimension({FamilyKind::SpecialTangent, r, d, u, v}, delta) != 0) return 0;
  return engine::blowup_route(r, d, delta, u, v);
}

}  // namespace charnum
