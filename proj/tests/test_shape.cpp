#include <gtest/gtest.h>

#include "shapelift/errors.hpp"
#include "shapelift/shape.hpp"
#include "support.hpp"

using namespace shapelift;
using namespace testing_support;

namespace {

std::vector<ShapeRegion> regions() {
  return {ShapeRegion(ToricDomain::ball(3)), ShapeRegion(ToricDomain::ball(Q("301/100"))),
          ShapeRegion(ToricDomain::ellipsoid(1, 3)), ShapeRegion(ToricDomain::ellipsoid(Q("3/2"), 3)),
          ShapeRegion(ToricDomain::polydisk(1, 2)), ShapeRegion(ToricDomain::polydisk(Q("4/3"), Q("7/2")))};
}

}  // namespace

TEST(ShapeRegion, RejectsUnsupportedDomains) {
  EXPECT_THROW(ShapeRegion(ToricDomain::ellipsoid(2, 5)), DomainError);
  EXPECT_THROW(ShapeRegion(ToricDomain::ellipsoid(2, 2)), DomainError);
  EXPECT_THROW(ShapeRegion(ToricDomain::toric_pl({P("0", "2"), P("2", "0")})), DomainError);
  EXPECT_EQ(ShapeRegion(ToricDomain::ellipsoid(2, 8)).k(), Rational(4));
}

TEST(ShapeMember, Examples) {
  ShapeRegion ball(ToricDomain::ball(Q("301/100")));
  EXPECT_TRUE(shape_member(ball, P("1", "2")));
  EXPECT_FALSE(shape_member(ball, P("2", "3")));
  EXPECT_TRUE(shape_member(ShapeRegion(ToricDomain::ellipsoid(1, 3)), P("3/10", "50")));
  EXPECT_THROW(shape_member(ball, P("0", "1")), DomainError);
}

TEST(KnottedMember, Examples) {
  EXPECT_TRUE(knotted_member(ShapeRegion(ToricDomain::ball(3)), P("9/10", "13/10")));
  EXPECT_TRUE(knotted_member(ShapeRegion(ToricDomain::ellipsoid(1, 3)), P("9/20", "3/2")));
  EXPECT_FALSE(knotted_member(ShapeRegion(ToricDomain::ball(3)), P("1/2", "1")));
  EXPECT_THROW(knotted_member(ShapeRegion(ToricDomain::ball(3)), P("2", "1")), DomainError);
}

TEST(KnottedMember, BoundaryStrictness) {
  ShapeRegion ball(ToricDomain::ball(3));
  // 3r = R is allowed, 2r + s = R is not
  EXPECT_TRUE(knotted_member(ball, P("1", "3/2")));
  EXPECT_FALSE(knotted_member(ball, P("1", "1")));
  EXPECT_FALSE(knotted_member(ball, P("1", "2")));
}

TEST(EmbKnottedMember, Examples) {
  ShapeRegion p12(ToricDomain::polydisk(1, 2));
  EXPECT_TRUE(emb_knotted_member(p12, 4, P("3/5", "3/2")));
  EXPECT_FALSE(knotted_member(p12, P("3/5", "3/2")));
  EXPECT_TRUE(emb_knotted_member(ShapeRegion(ToricDomain::ball(2)), 4, P("1/2", "6/5")));
  EXPECT_FALSE(emb_knotted_member(ShapeRegion(ToricDomain::ball(2)), 4, P("1/4", "1/2")));
}

TEST(EmbKnottedMember, HypothesisChecks) {
  EXPECT_THROW(emb_knotted_member(ShapeRegion(ToricDomain::ball(2)), 2, P("1/2", "1")), DomainError);
  EXPECT_THROW(emb_knotted_member(ShapeRegion(ToricDomain::ball(1)), 4, P("1/4", "1/2")), DomainError);
  EXPECT_THROW(emb_knotted_member(ShapeRegion(ToricDomain::ellipsoid(1, 3)), 4, P("1/4", "1/2")), DomainError);
  EXPECT_THROW(emb_knotted_member(ShapeRegion(ToricDomain::ellipsoid(2, 4)), 3, P("1/4", "1/2")), DomainError);
  EXPECT_THROW(emb_knotted_member(ShapeRegion(ToricDomain::ball(2)), 4, P("1", "1/2")), DomainError);
}

TEST(UnknottedThreshold, Examples) {
  EXPECT_EQ(unknotted_threshold(Family::Ball, 2), Rational(2));
  EXPECT_EQ(unknotted_threshold(Family::Ellipsoid, 3, 2), Q("3/2"));
  EXPECT_EQ(unknotted_threshold(Family::Polydisk, 1, 1), Rational(1));
  EXPECT_THROW(unknotted_threshold(Family::Ball, 0), DomainError);
  EXPECT_THROW(unknotted_threshold(Family::Ellipsoid, 3, Q("5/2")), DomainError);
}

TEST(ShapeMember, SymmetricUnderSwap) {
  std::mt19937_64 rng(20);
  for (const ShapeRegion& X : regions()) {
    for (int trial = 0; trial < 400; ++trial) {
      Point p = random_point(rng, 0, 6, 8);
      if (p.r.sign() <= 0 || p.s.sign() <= 0) continue;
      EXPECT_EQ(shape_member(X, p), shape_member(X, Point{p.s, p.r}));
    }
  }
}

TEST(KnottedMember, InsideShapeAndOpenImage) {
  std::mt19937_64 rng(21);
  for (const ShapeRegion& X : regions()) {
    int hits = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      Point p = random_point(rng, 0, 4, 10);
      if (p.r.sign() <= 0 || p.s.sign() <= 0) continue;
      if (p.s < p.r) std::swap(p.r, p.s);
      if (!knotted_member(X, p)) continue;
      ++hits;
      EXPECT_TRUE(shape_member(X, p)) << p;
      EXPECT_TRUE(moment_contains(X.domain(), p, kOpenImage)) << p;
    }
    EXPECT_GT(hits, 0) << X.domain().describe();
  }
}

TEST(ShapeMember, AboveStripEqualsOpenImage) {
  std::mt19937_64 rng(22);
  for (const ShapeRegion& X : regions()) {
    for (int trial = 0; trial < 1000; ++trial) {
      Point p = random_point(rng, 0, 5, 10);
      if (p.r.sign() <= 0 || p.s.sign() <= 0) continue;
      if (p.s < p.r) std::swap(p.r, p.s);
      if (p.r < strip_bound(X)) continue;
      EXPECT_EQ(shape_member(X, p), moment_contains(X.domain(), p, kOpenImage)) << X.domain().describe() << p;
    }
  }
}

TEST(ShapeRegionReduced, MatchesPointPredicate) {
  std::mt19937_64 rng(23);
  for (const ShapeRegion& X : regions()) {
    Region reg = shape_region_reduced(X);
    for (int trial = 0; trial < 500; ++trial) {
      Point p = random_point(rng, 0, 5, 8);
      if (p.r.sign() <= 0 || p.s.sign() <= 0 || p.s < p.r) continue;
      EXPECT_EQ(reg.contains(p), shape_member(X, p));
    }
  }
}

TEST(EmbKnottedMember, StrictlyMorePointsThanKnotted) {
  ShapeRegion P12(ToricDomain::polydisk(1, 2));
  int only_emb = 0;
  for (int i = 1; i < 40; ++i) {
    for (int j = i; j < 80; ++j) {
      Point p{Rational(BigInt(i), BigInt(20)), Rational(BigInt(j), BigInt(20))};
      bool emb = emb_knotted_member(P12, 4, p);
      bool kn = knotted_member(P12, p);
      if (emb && !kn) {
        ++only_emb;
        EXPECT_GT(2 * p.r, Rational(1));
      }
    }
  }
  EXPECT_GT(only_emb, 0);
}
