#pragma once

#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

namespace charnum {

/// Marked point A on a codim-u subspace, v special tangent conditions at A.
struct SpecialSpec {
  int u = 0;
  int v = 0;
};

/// Count of rational curves with a marked point A satisfying `spec`.
/// v <= r-2 expands divisor relations; v >= r-1 integrates the two-pointed
/// family class in the blowup ring.  Zero for v > 2r-2.
Rational w_count(int r, int d, const Constraint& delta, SpecialSpec spec);

/// Divisor-relation engine for one, two and three special tangents.
Rational w1_count(int r, int d, const Constraint& delta, int u);
Rational w2_count(int r, int d, const Constraint& delta, int u);
Rational w3_count(int r, int d, const Constraint& delta, int u);

/// Blowup-class route, valid for any v; w_count uses it for v >= r-1.
/// Integrates T h^u e (h+k-e)^v and removes the fibres of e lying over the
/// nodes of the family, which T e picks up once v >= r-1.
Rational w_high_count(int r, int d, const Constraint& delta, int u, int v);

namespace engine {

/// Memoized count; 0 whenever the expected dimension is nonzero.
Rational w(int r, int d, const Constraint& delta, int u, int v);

/// Divisor-relation expansion of w without routing or caching (v <= 3).
Rational w_lemma(int r, int d, const Constraint& delta, int u, int v);

}  // namespace engine

}  // namespace charnum
