#pragma once

#include "charnum/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charnum {

/// Largest ambient dimension supported by the engine.
inline constexpr int kMaxDim = 5;

/// A set of general linear conditions imposed on a curve.
///
/// `tangencies` counts hyperplanes the curve must be tangent to,
/// `incidences[c]` counts codimension-c subspaces the curve must meet
/// (c >= 2 only; hyperplane incidences are folded into a degree factor by
/// normalize_hyperplanes), and `node_codim` optionally places the node of a
/// nodal curve on a general codimension-k subspace.
struct Constraint {
  int tangencies = 0;
  std::array<int, kMaxDim + 1> incidences{};
  std::optional<int> node_codim;

  int count(int codim) const { return incidences[static_cast<std::size_t>(codim)]; }
  int non_hyperplane_count() const;
  /// -sum over codim >= 2 of count * codim^2.
  int rank_value() const;
  /// Dimensions cut by the tangencies and incidences (node excluded).
  int load() const;
  bool empty() const;

  Constraint& add(int codim, int n = 1);
  Constraint& remove(int codim, int n = 1);
  Constraint& add_tangencies(int n) {
    tangencies += n;
    return *this;
  }
  Constraint with(int codim, int n = 1) const {
    Constraint c = *this;
    c.add(codim, n);
    return c;
  }
  Constraint without_node() const {
    Constraint c = *this;
    c.node_codim.reset();
    return c;
  }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct RankKey {
  int tangencies;
  int non_hyperplane_count;
  int rank_value;
};

RankKey rank_key(const Constraint& c);

/// Total preorder used to prove termination of the nodal recursion: at equal
/// tangency count fewer non-hyperplane elements is smaller, more tangencies is
/// smaller, then smaller rank_value is smaller.  Remaining ties are broken
/// lexicographically on the fields so the result is deterministic.
std::weak_ordering compare(const Constraint& a, const Constraint& b);

/// Adds a marked point constrained to a general codimension-`codim` subspace.
/// Returns the scalar factor this contributes: 0 for a free point (codim 0)
/// or an empty subspace (codim > r), `degree` for a hyperplane, and 1 for
/// codim >= 2 (recorded as an incidence).
std::int64_t add_point_condition(Constraint& c, int r, int codim, int degree);

/// One ordered split of a constraint over two components.
struct Split {
  Constraint first;
  Constraint second;
  std::int64_t multiplicity;
};

/// Calls `fn(first, second, multiplicity)` for every ordered split of the
/// tangencies and incidences of `c`; the multiplicity is the product over
/// indices of binomial(c(i), first(i)).  The node condition is not split.
template <class Fn>
void for_each_split(const Constraint& c, Fn&& fn);

std::vector<Split> partitions(const Constraint& c);

/// Strips hyperplane incidences from a raw tuple (tangencies, codim-1 count,
/// ..., codim-r count [, node codim]) and returns the multiplier degree^m.
std::pair<Constraint, Rational> normalize_hyperplanes(std::span<const int> raw, int r,
                                                      int degree);

/// Decodes a table tuple (tangencies, codim-2 count, ..., codim-r count).
Constraint from_codim2_tuple(std::span<const int> tuple, int r);

enum class FamilyKind { Rational, Nodal, SpecialTangent, TwoPointed };

/// A countable family of stable maps, as used for dimension bookkeeping and by
/// the fiber-product counts.
struct FamilyHandle {
  FamilyKind kind = FamilyKind::Rational;
  int r = 2;
  int degree = 1;
  int marked_codim = 0;  // SpecialTangent only
  int special = 0;       // SpecialTangent only
};

/// Moduli dimension minus conditions imposed.  Zero means the count is finite.
int expected_dimension(const FamilyHandle& family, const Constraint& c);

struct ParsedConstraint {
  Constraint constraint;
  int hyperplanes = 0;
};

/// Parses `t:<n>;c2:<n>;...;c<r>:<n>[;node:<k>]`, with `;`, `,` or spaces
/// between entries.  Keys may appear in any
/// order; `c1` entries are accepted and reported separately.
ParsedConstraint parse_constraint(std::string_view text, int r);

/// Canonical text form: `t:<n>` followed by the nonzero `c<i>` entries in
/// increasing codimension and the node entry, if any.
std::string format_constraint(const Constraint& c);

struct ConstraintHash {
  std::size_t operator()(const Constraint& c) const noexcept;
};

// ---------------------------------------------------------------------------

namespace detail {

template <class Fn>
void split_from(const Constraint& c, int index, Constraint& first, Constraint& second,
                std::int64_t mult, Fn& fn) {
  if (index > kMaxDim) {
    fn(static_cast<const Constraint&>(first), static_cast<const Constraint&>(second),
       mult);
    return;
  }
  const int total = index == 0 ? c.tangencies : c.count(index);
  if (index == 1 || total == 0) {
    split_from(c, index + 1, first, second, mult, fn);
    return;
  }
  std::int64_t choose = 1;
  for (int k = 0; k <= total; ++k) {
    if (index == 0) {
      first.tangencies = k;
      second.tangencies = total - k;
    } else {
      first.incidences[static_cast<std::size_t>(index)] = k;
      second.incidences[static_cast<std::size_t>(index)] = total - k;
    }
    split_from(c, index + 1, first, second, mult * choose, fn);
    choose = choose * (total - k) / (k + 1);
  }
  if (index == 0) {
    first.tangencies = second.tangencies = 0;
  } else {
    first.incidences[static_cast<std::size_t>(index)] = 0;
    second.incidences[static_cast<std::size_t>(index)] = 0;
  }
}

}  // namespace detail

template <class Fn>
void for_each_split(const Constraint& c, Fn&& fn) {
  Constraint first;
  Constraint second;
  detail::split_from(c, 0, first, second, 1, fn);
}

}  // namespace charnum
