#include <gtest/gtest.h>

#include "shapelift/domain.hpp"
#include "shapelift/errors.hpp"
#include "support.hpp"

using namespace shapelift;
using namespace testing_support;

namespace {

ToricDomain pl_example() { return ToricDomain::toric_pl({P("0", "24"), P("2", "17"), P("19", "0")}); }

std::vector<ToricDomain> sample_domains() {
  return {ToricDomain::ball(3),         ToricDomain::ellipsoid(1, 3), ToricDomain::ellipsoid(Q("3/2"), 6),
          ToricDomain::polydisk(1, 2),  ToricDomain::polydisk(Q("5/3"), Q("5/3")), pl_example(),
          ToricDomain::toric_pl({P("0", "4"), P("1", "3"), P("3", "1"), P("5", "0")})};
}

// Below a decreasing PL graph, by direct interpolation.
bool under_profile(const std::vector<Point>& prof, const Point& p) {
  if (p.r.sign() < 0 || p.s.sign() < 0 || !(p.r < prof.back().r)) return false;
  for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
    if (prof[i].r <= p.r && p.r <= prof[i + 1].r) {
      Rational h = prof[i].s + (p.r - prof[i].r) * (prof[i + 1].s - prof[i].s) / (prof[i + 1].r - prof[i].r);
      return p.s < h;
    }
  }
  return false;
}

// Dense sample of the q-polygon boundary tested point by point.
bool q_boundary_inside(const ToricDomain& X, const Rational& r, const Rational& s, int per_edge) {
  auto v = q_polygon(r, r <= s ? s : r).vertices();
  if (s < r) v = {Point{0, 0}, Point{2 * r, 0}, Point{r, r + s}, Point{0, r + s}};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    for (int j = 0; j < per_edge; ++j) {
      Rational tau{BigInt(j), BigInt(per_edge)};
      if (!moment_contains(X, a + tau * (b - a), kOpenImage)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(MomentContains, Examples) {
  EXPECT_TRUE(moment_contains(ToricDomain::ball(3), P("9/10", "13/10"), kOpenReducedPositive));
  EXPECT_FALSE(moment_contains(ToricDomain::ellipsoid(1, 3), P("1", "0"), kOpenImage));
  EXPECT_FALSE(moment_contains(pl_example(), P("5/2", "33/2"), kOpenImage));
  EXPECT_TRUE(moment_contains(pl_example(), P("5/2", "33/2"), MomentQuery{true, false, false}));
}

TEST(MomentContains, QueryFlags) {
  ToricDomain e = ToricDomain::ellipsoid(1, 3);
  EXPECT_TRUE(moment_contains(e, P("0", "1"), kOpenImage));
  EXPECT_FALSE(moment_contains(e, P("0", "1"), MomentQuery{false, false, true}));
  EXPECT_FALSE(moment_contains(e, P("1/2", "1/4"), MomentQuery{false, true, false}));
  EXPECT_TRUE(moment_contains(e, P("1/4", "1/2"), MomentQuery{false, true, false}));
  EXPECT_TRUE(moment_contains(ToricDomain::polydisk(1, 2), P("1", "2"), MomentQuery{true, false, false}));
  EXPECT_FALSE(moment_contains(ToricDomain::polydisk(1, 2), P("1", "1"), kOpenImage));
}

TEST(Domains, ConstructionValidates) {
  EXPECT_THROW(ToricDomain::ball(0), DomainError);
  EXPECT_THROW(ToricDomain::ellipsoid(2, 1), DomainError);
  EXPECT_THROW(ToricDomain::polydisk(-1, 2), DomainError);
  EXPECT_THROW(ToricDomain::toric_pl({P("0", "3"), P("1", "3"), P("2", "0")}), DomainError);
  EXPECT_THROW(ToricDomain::toric_pl({P("0", "3"), P("0", "1"), P("2", "0")}), DomainError);
  EXPECT_THROW(ToricDomain::toric_pl({P("1", "3"), P("2", "0")}), DomainError);
  EXPECT_THROW(ToricDomain::toric_pl({P("0", "3"), P("2", "1")}), DomainError);
  EXPECT_EQ(*ToricDomain::ellipsoid(2, 6).integral_ratio(), 3);
  EXPECT_FALSE(ToricDomain::ellipsoid(2, 5).integral_ratio().has_value());
}

TEST(QPolygon, Examples) {
  auto v = q_polygon(1, 1).vertices();
  std::vector<Point> want{P("0", "0"), P("2", "0"), P("1", "2"), P("0", "2")};
  EXPECT_EQ(v, want);
  v = q_polygon(Q("1/2"), 1).vertices();
  want = {P("0", "0"), P("1", "0"), P("1/2", "3/2"), P("0", "3/2")};
  EXPECT_EQ(v, want);
  EXPECT_THROW(q_polygon(2, 1), DomainError);
  EXPECT_THROW(q_polygon(0, 1), DomainError);
}

TEST(QPolygon, VerticesSitOnDefiningBoundary) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng, 0, 5) + Q("1/13");
    Rational b = a + abs(random_rational(rng, 0, 5));
    auto v = q_polygon(a, b).vertices();
    ASSERT_EQ(v.size(), 4u);
    Rational h = a + b;
    auto bound = [&](const Rational& y) { return 2 * a - a * y / h; };
    EXPECT_EQ(v[1].r, bound(v[1].s));
    EXPECT_EQ(v[2].r, bound(v[2].s));
    EXPECT_EQ(v[2].s, h);
    EXPECT_EQ(v[3].s, h);
    EXPECT_EQ(v[2].r, a);
    for (const Point& p : v) {
      EXPECT_LE(p.r, bound(p.s));
      EXPECT_GE(p.s, Rational(0));
      EXPECT_LE(p.s, h);
    }
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(ToricDomain::ellipsoid(1, 4)), Rational(2));
  EXPECT_EQ(volume(ToricDomain::ball(2)), Rational(2));
  EXPECT_EQ(volume(ToricDomain::polydisk(1, 2)), Rational(2));
  // trapezoid 0..2 plus triangle 2..19
  EXPECT_EQ(volume(pl_example()), Rational(41) + Q("289/2"));
}

TEST(MomentContains, ClosureContainsOpen) {
  std::mt19937_64 rng(7);
  for (const ToricDomain& X : sample_domains()) {
    for (int trial = 0; trial < 400; ++trial) {
      Point p = random_point(rng, -1, 25, 4);
      for (bool reduced : {false, true}) {
        for (bool positive : {false, true}) {
          bool open = moment_contains(X, p, MomentQuery{false, reduced, positive});
          bool closed = moment_contains(X, p, MomentQuery{true, reduced, positive});
          EXPECT_TRUE(!open || closed) << X.describe() << " " << p;
          EXPECT_EQ(moment_region(X, MomentQuery{false, reduced, positive}).contains(p), open);
          EXPECT_EQ(moment_region(X, MomentQuery{true, reduced, positive}).contains(p), closed);
        }
      }
    }
  }
}

TEST(MomentContains, PlMatchesInterpolation) {
  std::mt19937_64 rng(8);
  ToricDomain X = pl_example();
  for (int trial = 0; trial < 2000; ++trial) {
    Point p = random_point(rng, -1, 25, 3);
    EXPECT_EQ(moment_contains(X, p, kOpenImage), under_profile(X.as_toric_pl()->profile, p)) << p;
  }
}

TEST(MomentContains, ScalingInvariance) {
  std::mt19937_64 rng(9);
  for (const ToricDomain& X : sample_domains()) {
    for (int trial = 0; trial < 200; ++trial) {
      Rational lambda = abs(random_rational(rng, 0, 4)) + Q("1/5");
      Point p = random_point(rng, 0, 20, 4);
      ToricDomain Y = X.scaled(lambda);
      for (bool closure : {false, true}) {
        MomentQuery q{closure, false, false};
        EXPECT_EQ(moment_contains(Y, lambda * p, q), moment_contains(X, p, q));
      }
    }
  }
}

TEST(QInterior, ConvexRegionsMatchPredicate) {
  std::mt19937_64 rng(10);
  for (const ToricDomain& X : sample_domains()) {
    if (X.as_toric_pl()) continue;
    Region inner = q_interior_region(X);
    Region diag = q_diagonal_region(X);
    for (int trial = 0; trial < 500; ++trial) {
      Point p = random_point(rng, 0, 4, 6);
      if (p.r.sign() <= 0 || p.s.sign() <= 0) continue;
      EXPECT_EQ(inner.contains(p), q_in_interior(X, p.r, p.s)) << X.describe() << " " << p;
      EXPECT_EQ(diag.contains(p), q_in_interior(X, p.r, p.r)) << X.describe() << " " << p;
    }
  }
  EXPECT_THROW(q_interior_region(pl_example()), DomainError);
}

TEST(QInterior, PlDiagonalRegionMatchesPredicate) {
  std::mt19937_64 rng(12);
  for (const ToricDomain& X : sample_domains()) {
    if (!X.as_toric_pl()) continue;
    Region diag = q_diagonal_region(X);
    for (int trial = 0; trial < 1000; ++trial) {
      Point p = random_point(rng, 0, 12, 6);
      if (p.r.sign() <= 0 || p.s.sign() <= 0) continue;
      EXPECT_EQ(diag.contains(p), q_in_interior(X, p.r, p.r)) << X.describe() << " " << p;
    }
  }
}

TEST(QInterior, AgreesWithBoundarySampling) {
  std::mt19937_64 rng(13);
  for (const ToricDomain& X : sample_domains()) {
    for (int trial = 0; trial < 300; ++trial) {
      Point p = random_point(rng, 0, 12, 5);
      if (p.r.sign() <= 0 || p.s.sign() <= 0) continue;
      bool exact = q_in_interior(X, p.r, p.s);
      bool sampled = q_boundary_inside(X, p.r, p.s, 48);
      if (exact) EXPECT_TRUE(sampled) << X.describe() << " " << p;
      if (!sampled) EXPECT_FALSE(exact) << X.describe() << " " << p;
    }
  }
}

TEST(TriangleInClosedImage, Examples) {
  EXPECT_TRUE(triangle_in_closed_image(ToricDomain::ellipsoid(1, 3), 1, 3));
  EXPECT_TRUE(triangle_in_closed_image(ToricDomain::ellipsoid(1, 3), Q("1/2"), 2));
  EXPECT_FALSE(triangle_in_closed_image(ToricDomain::ellipsoid(1, 3), Q("1/2"), Q("13/4")));
  EXPECT_TRUE(triangle_in_closed_image(pl_example(), 19, 19));
  EXPECT_FALSE(triangle_in_closed_image(pl_example(), 19, 20));
  EXPECT_TRUE(triangle_in_closed_image(pl_example(), 2, 24));
}
