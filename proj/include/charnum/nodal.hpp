#pragma once

#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

namespace charnum {

/// Selection of the spaces s, t in the incidence recursion.  u is always the
/// incidence of smallest codim.
enum class NodalChoice {
  Smallest,  // s, t follow u in canonical order
  Largest,   // s, t are the two incidences of largest codim
};

/// Rational nodal curves meeting the incidences of `delta` with the node on a
/// general codim-k subspace, k = delta.node_codim (absent means 0).  Requires
/// no tangencies.  Only the top-level expansion honours `choice`.
Rational nodal_incidence(int r, int d, const Constraint& delta,
                         NodalChoice choice = NodalChoice::Smallest);

/// Same with tangencies allowed.
Rational nodal_char(int r, int d, const Constraint& delta);

/// Conic family: double covers of lines with a marked node point.
Rational nodal_degree2_base(int r, const Constraint& delta);

/// Elliptic curves of fixed generic j-invariant.  `delta` carries no node.
Rational elliptic_fixed_j(int r, int d, const Constraint& delta);

namespace engine {

/// Nodal count with the two preimages of the node ordered; nodal_char is half
/// of it.  Memoized, 0 whenever the expected dimension is nonzero.
Rational nodal_ord(int r, int d, const Constraint& delta);

/// One step of the incidence recursion with an explicit choice, uncached.
Rational nodal_incidence_step(int r, int d, const Constraint& delta, NodalChoice choice);

}  // namespace engine

}  // namespace charnum
