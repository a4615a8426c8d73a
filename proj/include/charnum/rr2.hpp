#pragma once

#include "charnum/chow_blowup.hpp"
#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

#include <memory>

namespace charnum {

/// Class in the blowup ring of the closure of ev_AC over a two-pointed family
/// of degree-d rational curves satisfying `delta`.
struct FamilyClass {
  int r = 0;
  int degree = 0;
  Constraint delta;
  /// Dimension of the two-pointed family; the class lives in codim 2r - dim.
  int dimension = 0;
  int codim = 0;
  /// Zero when the family is empty or its image has smaller dimension.
  BlowupRing<Rational>::Vector value;
  /// Number of determining products the solve used.
  int equations = 0;
};

/// Solves for the class from its products with h^m k^n (two-pointed counts)
/// and with h^m e (h+k-e)^n, n <= r-2 (special tangent counts).  Memoized;
/// the result is verified against every product it was solved from.
std::shared_ptr<const FamilyClass> family_class(int r, int d, const Constraint& delta);

/// Curves of degrees d1, d2 glued at C and meeting again at A = B, with the
/// A = B image on a codim-k subspace and C on a codim-l subspace.  Ordered
/// components; `unordered` halves the count.
Rational rr2_count(int r, int d1, const Constraint& g1, int d2, const Constraint& g2, int k,
                   int l, bool unordered = false);

/// Same with a shared constraint distributed over both components, tangencies
/// allowed to fall on C.
Rational rr2_count_with_tangency(int r, int d1, int d2, const Constraint& delta, int k, int l);

namespace engine {

/// Ordered rr2 count; 0 whenever the expected dimension is nonzero.
Rational rr2(int r, int d1, const Constraint& g1, int d2, const Constraint& g2, int k, int l);

}  // namespace engine

}  // namespace charnum
