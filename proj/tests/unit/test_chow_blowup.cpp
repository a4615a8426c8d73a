#include "charnum/chow_blowup.hpp"
#include "charnum/linear_solve.hpp"

#include <doctest.h>

#include <random>

using namespace charnum;

namespace {

using Ring = BlowupRing<Rational>;

Ring::Vector random_class(const Ring& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pick(0, ring.size() - 1);
  Ring::Vector x = ring.zero();
  for (int i = 0; i < 4; ++i) x(pick(rng)) = Rational(coeff(rng), 1 + (i % 2));
  return x;
}

}  // namespace

TEST_SUITE("chow_blowup") {
  TEST_CASE("relation examples") {
    CHECK(blowup_ring(1).render(blowup_ring(1).parse("e")) == "h + k");
    CHECK(blowup_ring(2).render(blowup_ring(2).parse("e^2")) == "3he - h^2 - hk - k^2");
    const auto& r3 = blowup_ring(3);
    CHECK((r3.parse("e^3") == r3.parse("4he^2 - 6h^2e + (h^3 + h^2k + hk^2 + k^3)")));
    const auto& r4 = blowup_ring(4);
    CHECK((r4.parse("e^4") ==
          r4.parse("5he^3 - 10h^2e^2 + 10h^3e - (h^4 + h^3k + h^2k^2 + hk^3 + k^4)")));
  }

  TEST_CASE("products reduce to normal form") {
    const auto& r2 = blowup_ring(2);
    CHECK((r2.multiply(r2.parse("h+k-e"), r2.parse("e")) == r2.parse("h^2 + hk + k^2 - he")));
    CHECK((r2.parse("ke") == r2.parse("he")));
    CHECK((r2.parse("h^3") == r2.zero()));
    const auto& r3 = blowup_ring(3);
    const auto t1 = r3.parse("2(h^2k+hk^2) - 6h^2e + 2he^2");
    CHECK(r3.integrate(r3.multiply(t1, t1)) == 0);
    CHECK(r3.render(t1) == "2he^2 - 6h^2e + 2h^2k + 2hk^2");
  }

  TEST_CASE("integration") {
    for (int r = 1; r <= 5; ++r) CHECK(blowup_ring(r).integrate(blowup_ring(r).monomial(r, r, 0)) == 1);
    CHECK(blowup_ring(1).integrate(blowup_ring(1).parse("he")) == 1);
    CHECK_THROWS_AS(blowup_ring(3).integrate(blowup_ring(3).parse("h^2k^3")), std::domain_error);
    CHECK_THROWS_AS(blowup_ring(3).integrate(blowup_ring(3).parse("h^3k^3 + h")), std::domain_error);
  }

  TEST_CASE("exceptional divisor restricted to a fibre") {
    // h^a e^(2r-a) = (-1)^(r+1) binom(2r-a, r)
    for (int r = 1; r <= 5; ++r) {
      const auto& ring = blowup_ring(r);
      for (int a = 0; a <= r; ++a) {
        const Rational v = ring.integrate(ring.multiply(ring.monomial(a, 0, 0),
                                                        ring.power(ring.monomial(0, 0, 1), 2 * r - a)));
        const Rational sign = (r % 2 == 1) ? 1 : -1;
        CAPTURE(r);
        CAPTURE(a);
        CHECK(v == sign * Rational(binomial(2 * r - a, r)));
      }
    }
  }

  TEST_CASE("monomial bases") {
    CHECK(blowup_ring(3).monomial_basis(3).size() == 6);
    CHECK(blowup_ring(3).monomial_basis(0).size() == 1);
    const auto b = blowup_ring(1).monomial_basis(1);
    REQUIRE(b.size() == 2);
    for (int r = 1; r <= 5; ++r) {
      int total = 0;
      for (int c = 0; c <= 2 * r; ++c) total += static_cast<int>(blowup_ring(r).monomial_basis(c).size());
      CHECK(total == 2 * r * r + 2 * r);
    }
  }

  TEST_CASE("pairing between complementary codims is nonsingular") {
    for (int r = 1; r <= 5; ++r) {
      const auto& ring = blowup_ring(r);
      for (int c = 0; c <= 2 * r; ++c) {
        const auto lo = ring.monomial_basis(c);
        const auto hi = ring.monomial_basis(2 * r - c);
        REQUIRE(lo.size() == hi.size());
        const auto n = static_cast<Eigen::Index>(lo.size());
        Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) {
            const auto& x = lo[static_cast<std::size_t>(i)];
            const auto& y = hi[static_cast<std::size_t>(j)];
            m(i, j) = ring.integrate(ring.monomial(x.h + y.h, x.k + y.k, x.e + y.e));
          }
        Eigen::Matrix<Rational, Eigen::Dynamic, 1> rhs = Eigen::Matrix<Rational, Eigen::Dynamic, 1>::Zero(n);
        if (n > 0) rhs(0) = 1;
        CAPTURE(r);
        CAPTURE(c);
        CHECK_NOTHROW(solve_exact<Rational>(m, rhs));
      }
    }
  }

  TEST_CASE("ring laws on random classes") {
    std::mt19937 rng(2024);
    for (int r = 1; r <= 5; ++r) {
      const auto& ring = blowup_ring(r);
      for (int i = 0; i < 200; ++i) {
        const auto x = random_class(ring, rng);
        const auto y = random_class(ring, rng);
        const auto z = random_class(ring, rng);
        CHECK((ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z))));
        CHECK((ring.multiply(x, y) == ring.multiply(y, x)));
        CHECK((ring.multiply(x, y + z) == ring.multiply(x, y) + ring.multiply(x, z)));
        CHECK((ring.multiply(x, ring.one()) == x));
        CHECK((ring.parse(ring.render(x)) == x));
      }
    }
  }

  TEST_CASE("rewrite order does not matter") {
    for (int r = 1; r <= 5; ++r) {
      const auto& ring = blowup_ring(r);
      const auto h = ring.monomial(1, 0, 0);
      const auto k = ring.monomial(0, 1, 0);
      const auto e = ring.monomial(0, 0, 1);
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
          for (int c = 0; c <= r + 2; ++c) {
            const auto left = ring.multiply(ring.multiply(ring.power(h, a), ring.power(k, b)),
                                            ring.power(e, c));
            const auto right = ring.multiply(ring.power(e, c),
                                             ring.multiply(ring.power(k, b), ring.power(h, a)));
            CHECK((left == right));
            CHECK((ring.monomial(a, b, c) == left));
          }
    }
  }

  TEST_CASE("parser") {
    const auto& r2 = blowup_ring(2);
    CHECK((r2.parse("1/2 h + 1/2 h") == r2.parse("h")));
    CHECK((r2.parse("(h+k)^2") == r2.parse("h^2 + 2hk + k^2")));
    CHECK((r2.parse("2(h)(k)") == r2.parse("2hk")));
    CHECK_THROWS(r2.parse("h +"));
    CHECK_THROWS(r2.parse("x"));
  }
}
