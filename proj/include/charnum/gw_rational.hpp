#pragma once

#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

#include <span>
#include <vector>

namespace charnum {

/// One summand of a divisor relation on a space of one-pointed or unpointed
/// stable maps.  Boundary terms carry the degrees of the two components; for
/// K_A the first degree is the one of the component holding A.
struct DivisorTerm {
  enum class Kind { H, LMark, T, KBoundary, KMarked, WSpecial, Excess };
  Kind kind;
  Rational coefficient;
  int d1 = 0;
  int d2 = 0;
};

/// T = (d-1)/d H + sum over ordered (d1, d2) of d1 d2 / (2d) K(d1, d2).
std::vector<DivisorTerm> tangency_divisor(int d);

/// W_A = (2 - 2/d) L_A + 1/d^2 H + sum_j (d-j)^2/d^2 K_A(j, d-j).
std::vector<DivisorTerm> special_tangent_divisor(int d);

/// Excess corrections of a repeated special tangent: -d1 d2 / d^2 per ordered
/// degree split, one per pair of components glued at A.
std::vector<DivisorTerm> excess_divisor(int d);

/// Genus-zero incidence count of degree-d curves in P^r with one marked
/// point on each listed general subspace (codims in 1..r).  Throws
/// DimensionError when the count is not zero-dimensional.
Rational gw_incidence(int r, int d, std::span<const int> codims);

/// Characteristic number of rational curves: incidences and tangencies.
/// Returns 0 for negative expected dimension, throws DimensionError for
/// positive.
Rational rational_char(int r, int d, const Constraint& delta);

/// Count with a marked point A on a codim-u subspace.  v must be 0; special
/// tangent conditions are handled by w_count.
Rational marked_special_interface(int r, int d, const Constraint& delta, int u, int v = 0);

namespace engine {

/// Memoized rational count; 0 whenever the expected dimension is nonzero.
Rational rat(int r, int d, const Constraint& delta);

/// rat with one extra marked point on a codim-`codim` subspace.
Rational rat_point(int r, int d, Constraint delta, int codim);

/// rat with extra marked points on subspaces of the given codims.
Rational rat_points(int r, int d, Constraint delta, std::initializer_list<int> codims);

}  // namespace engine

}  // namespace charnum
