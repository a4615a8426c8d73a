#include "charnum/rr2.hpp"

#include "charnum/cache.hpp"
#include "charnum/errors.hpp"
#include "charnum/gw_rational.hpp"
#include "charnum/linear_solve.hpp"
#include "charnum/reducible.hpp"
#include "charnum/special_tangent.hpp"

#include <mutex>
#include <tuple>
#include <unordered_map>

namespace charnum {

namespace {

using Vector = BlowupRing<Rational>::Vector;
using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct ClassKey {
  int r;
  int d;
  Constraint delta;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& k) const noexcept {
    return ConstraintHash{}(k.delta) * 31 + static_cast<std::size_t>(k.r * 17 + k.d);
  }
};

std::mutex class_mutex;
std::unordered_map<ClassKey, std::shared_ptr<const FamilyClass>, ClassKeyHash> class_memo;

struct Product {
  Vector monomial;
  Rational value;
};

std::shared_ptr<const FamilyClass> solve_class(int r, int d, const Constraint& delta) {
  const auto& ring = blowup_ring(r);
  auto out = std::make_shared<FamilyClass>();
  out->r = r;
  out->degree = d;
  out->delta = delta;
  out->dimension = expected_dimension({FamilyKind::TwoPointed, r, d}, delta);
  out->codim = 2 * r - out->dimension;
  out->value = ring.zero();
  const int dim = out->dimension;
  if (dim < 0 || dim > 2 * r) return out;

  std::vector<Product> products;
  for (int m = 0; m <= r; ++m) {
    const int n = dim - m;
    if (n < 0 || n > r) continue;
    products.push_back({ring.monomial(m, n, 0), engine::rat_points(r, d, delta, {m, n})});
  }
  const Vector tangent = ring.parse("h+k-e");
  for (int n = 0; n <= r - 2; ++n) {
    const int m = dim - 1 - n;
    if (m < 0 || m > r) continue;
    products.push_back({ring.multiply(ring.monomial(m, 0, 1), ring.power(tangent, n)),
                        engine::w(r, d, delta, m, n)});
  }

  const auto basis = ring.monomial_basis(out->codim);
  const auto rows = static_cast<Eigen::Index>(products.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  Matrix a(rows, cols);
  Vector b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    b(i) = products[static_cast<std::size_t>(i)].value;
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Monomial& mono = basis[static_cast<std::size_t>(j)];
      a(i, j) = ring.integrate(ring.multiply(ring.monomial(mono.h, mono.k, mono.e),
                                             products[static_cast<std::size_t>(i)].monomial));
    }
  }
  ExactSolution<Rational> sol;
  try {
    sol = solve_exact<Rational>(a, b);
  } catch (const std::domain_error&) {
    throw InvariantError("family class system is singular for r=" + std::to_string(r) +
                         " d=" + std::to_string(d) + " " + format_constraint(delta));
  }
  check_invariant(sol.consistent, "family class products are inconsistent for r=" +
                                      std::to_string(r) + " d=" + std::to_string(d) + " " +
                                      format_constraint(delta));
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Monomial& mono = basis[static_cast<std::size_t>(j)];
    out->value(ring.index_of(mono)) = sol.x(j);
  }
  for (const Product& p : products)
    check_invariant(ring.integrate(ring.multiply(out->value, p.monomial)) == p.value,
                    "family class round trip failed");
  out->equations = static_cast<int>(rows);
  return out;
}

}  // namespace

std::shared_ptr<const FamilyClass> family_class(int r, int d, const Constraint& delta) {
  Constraint c = delta;
  c.node_codim.reset();
  const ClassKey key{r, d, c};
  {
    std::lock_guard lock(class_mutex);
    const auto it = class_memo.find(key);
    if (it != class_memo.end()) return it->second;
  }
  auto cls = solve_class(r, d, c);
  std::lock_guard lock(class_mutex);
  return class_memo.emplace(key, std::move(cls)).first->second;
}

namespace {

Rational rr2_ordered(int r, int d1, const Constraint& g1, int d2, const Constraint& g2, int k,
                     int l) {
  if (k < 0 || l < 0 || k > r || l > r) return 0;
  const int dim1 = expected_dimension({FamilyKind::TwoPointed, r, d1}, g1);
  const int dim2 = expected_dimension({FamilyKind::TwoPointed, r, d2}, g2);
  if (dim1 + dim2 - 2 * r - k - l != 0) return 0;
  if (dim1 < 0 || dim2 < 0 || dim1 > 2 * r || dim2 > 2 * r) return 0;
  // the count is symmetric in the two components
  const bool swap = std::make_tuple(d1, g1.tangencies, g1.incidences) >
                    std::make_tuple(d2, g2.tangencies, g2.incidences);
  CountKey key{CountTag::RR2, r, swap ? d2 : d1, swap ? d1 : d2, swap ? g2 : g1, swap ? g1 : g2};
  key.k = k;
  key.l = l;
  return global_cache().get_or_compute(key, [&] {
    const auto& ring = blowup_ring(r);
    const auto t1 = family_class(r, d1, g1);
    const auto t2 = family_class(r, d2, g2);
    const Vector prod = ring.multiply(ring.multiply(t1->value, t2->value), ring.monomial(k, l, 0));
    return ring.integrate(prod);
  });
}

}  // namespace

Rational rr2_count(int r, int d1, const Constraint& g1, int d2, const Constraint& g2, int k,
                   int l, bool unordered) {
  if (r < 2 || r > kMaxDim) throw std::invalid_argument("r must lie in 2..5");
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("component degrees must be positive");
  const int dim1 = expected_dimension({FamilyKind::TwoPointed, r, d1}, g1);
  const int dim2 = expected_dimension({FamilyKind::TwoPointed, r, d2}, g2);
  const int excess = dim1 + dim2 - 2 * r - k - l;
  if (excess > 0)
    throw DimensionError("two-nodal count has positive expected dimension " +
                         std::to_string(excess));
  Constraint c1 = g1;
  Constraint c2 = g2;
  c1.node_codim.reset();
  c2.node_codim.reset();
  Rational v = rr2_ordered(r, d1, c1, d2, c2, k, l);
  if (unordered) v /= 2;
  return v;
}

namespace engine {

Rational rr2(int r, int d1, const Constraint& g1, int d2, const Constraint& g2, int k, int l) {
  if (d1 < 1 || d2 < 1) return 0;
  Constraint c1 = g1;
  Constraint c2 = g2;
  c1.node_codim.reset();
  c2.node_codim.reset();
  return rr2_ordered(r, d1, c1, d2, c2, k, l);
}

}  // namespace engine

Rational rr2_count_with_tangency(int r, int d1, int d2, const Constraint& delta, int k, int l) {
  if (r < 2 || r > kMaxDim) throw std::invalid_argument("r must lie in 2..5");
  return expand_tangencies(delta, l, r, [&](const Constraint& g1, const Constraint& g2, int node) {
    return rr2_ordered(r, d1, g1, d2, g2, k, node);
  });
}

}  // namespace charnum
