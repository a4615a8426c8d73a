#pragma once

#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

#include <vector>

namespace charnum {

/// One term c * T1^t1 * T2^t2 * L_C^lc of a power of T1 + T2 + 2 L_C.
struct TangencyTerm {
  int t1 = 0;
  int t2 = 0;
  int lc = 0;
  Integer coefficient;
};

/// Expands T^n on a glued family, T = T1 + T2 + 2 L_C.
std::vector<TangencyTerm> tangency_split(int n);

/// Count on a fiber product over the connecting point C whose image lies on
/// a codim-k subspace.  `side1(a)` and `side2(b)` return the component counts
/// with C on a general codim-a (codim-b) subspace; the node class is spread
/// over the diagonal, so a + b = r + k.
template <class Side1, class Side2>
Rational fiber_product_count(int r, int k, Side1&& side1, Side2&& side2) {
  Rational total = 0;
  if (k > r) return total;
  for (int a = k; a <= r; ++a) {
    const int b = r + k - a;
    if (b < 0 || b > r) continue;
    const Rational x = side1(a);
    if (x == 0) continue;
    total += x * side2(b);
  }
  return total;
}

/// Distributes the tangencies of `delta` over a glued pair: l of them move
/// onto the node (weight 2^l binom(t, l)), the rest and all incidences are
/// split between the components.  Calls `pair(g1, g2, k + l)` per split.
template <class Pair>
Rational expand_tangencies(const Constraint& delta, int k, int r, Pair&& pair) {
  Rational total = 0;
  const int t = delta.tangencies;
  Integer weight = 1;  // 2^l binom(t, l)
  for (int l = 0; l <= t; ++l) {
    if (k + l > r) break;
    Constraint rest = delta;
    rest.tangencies = t - l;
    rest.node_codim.reset();
    Rational inner = 0;
    for_each_split(rest, [&](const Constraint& g1, const Constraint& g2, std::int64_t m) {
      const Rational v = pair(g1, g2, k + l);
      if (v != 0) inner += v * m;
    });
    total += inner * Rational(weight);
    weight = weight * 2 * (t - l) / (l + 1);
  }
  return total;
}

}  // namespace charnum
