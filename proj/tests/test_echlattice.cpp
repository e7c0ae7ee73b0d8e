#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "shapelift/echlattice.hpp"
#include "shapelift/errors.hpp"
#include "support.hpp"

using namespace shapelift;
using namespace testing_support;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST(CapSequence, Examples) {
  EXPECT_EQ(cap_sequence(1, 2, 8).entries, ints({0, 1, 2, 2, 3, 3, 4, 4, 4}));
  EXPECT_EQ(cap_sequence(1, 1, 5).entries, ints({0, 1, 1, 2, 2, 2}));
  EXPECT_THROW(cap_sequence(0, 1, 3), DomainError);
}

TEST(CapSequence, MatchesEnumerationOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Rational a = abs(random_rational(rng, 0, 5, 7)) + Q("1/3");
    Rational b = abs(random_rational(rng, 0, 5, 7)) + Q("1/3");
    CapSequence seq = cap_sequence(a, b, 150);
    ASSERT_EQ(seq.entries.size(), 151u);
    auto all = oracle::combos_up_to(a, b, seq.entries.back());
    ASSERT_GE(all.size(), seq.entries.size());
    for (std::size_t i = 0; i < seq.entries.size(); ++i) EXPECT_EQ(seq.entries[i], all[i]);
  }
}

TEST(CapSequence, Homogeneity) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    Rational a = abs(random_rational(rng, 0, 4, 5)) + Q("1/4");
    Rational b = abs(random_rational(rng, 0, 4, 5)) + Q("1/4");
    Rational lambda = abs(random_rational(rng, 0, 3, 5)) + Q("1/7");
    auto base = cap_sequence(a, b, 120).entries;
    auto scaled = cap_sequence(lambda * a, lambda * b, 120).entries;
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_EQ(scaled[i], lambda * base[i]);
  }
}

TEST(EchCapacity, Examples) {
  EXPECT_EQ(ech_capacity(Q("7/3"), 5, 0), Rational(0));
  EXPECT_EQ(ech_capacity(1, 3, 3), Rational(3));
  EXPECT_EQ(ech_capacity(Q("6/5"), Q("12/5"), 3), Q("12/5"));
  EXPECT_GT(ech_capacity(1, 3, 3), ech_capacity(Q("6/5"), Q("12/5"), 3));
}

TEST(EchCapacity, OnlyOriginZeroReproducesTheRemark) {
  // c_{k+1}(E(1, x)) > a k at k = 2, a = 6/5, x = 3
  const std::size_t k = 2;
  auto lhs = cap_sequence(1, 3, 10).entries;
  auto rhs = cap_sequence(Q("6/5"), Q("12/5"), 10).entries;
  EXPECT_GT(lhs[k + 1], Q("12/5"));
  EXPECT_GT(lhs[k + 1], rhs[k + 1]);
  // shifting to origin 1 moves both indices down by one and the inequality fails
  EXPECT_FALSE(lhs[k] > rhs[k]);
}

TEST(LatticeCount, Examples) {
  EXPECT_EQ(lattice_count(2, 9, 6), 4);
  EXPECT_EQ(lattice_count(Q("5/3"), Q("7/2"), 0), 1);
  EXPECT_EQ(lattice_count(3, 16, 24), 12);
  EXPECT_EQ(lattice_count(4, 12, 24), 12);
  EXPECT_EQ(lattice_count(3, 16, 24, CountMode::BruteForce), 12);
}

TEST(LatticeCount, ModesAgreeWithOracle) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = abs(random_rational(rng, 0, 6, 9)) + Q("1/5");
    Rational b = abs(random_rational(rng, 0, 6, 9)) + Q("1/5");
    Rational t = abs(random_rational(rng, 0, 40, 9));
    // keep t/a and t/b within 200
    if (t / a > 200 || t / b > 200) continue;
    BigInt row = lattice_count(a, b, t, CountMode::RowSum);
    BigInt brute = lattice_count(a, b, t, CountMode::BruteForce);
    EXPECT_EQ(row, brute);
    EXPECT_EQ(row, oracle::lattice_points(a, b, t)) << a << " " << b << " " << t;
  }
}

TEST(LatticeCount, SequenceIsFirstCrossingOfCount) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 15; ++trial) {
    Rational a = abs(random_rational(rng, 0, 4, 6)) + Q("1/3");
    Rational b = abs(random_rational(rng, 0, 4, 6)) + Q("1/3");
    auto seq = cap_sequence(a, b, 200).entries;
    Rational prev(-1);  // largest distinct value below seq[k]
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k > 0 && seq[k - 1] < seq[k]) prev = seq[k - 1];
      BigInt need = BigInt(static_cast<long>(k) + 1);
      EXPECT_GE(lattice_count(a, b, seq[k]), need);
      // R is constant on [prev, seq[k]), so seq[k] is the first crossing
      if (prev.sign() >= 0) EXPECT_LT(lattice_count(a, b, prev), need);
    }
  }
}

TEST(ClosedFormR, Examples) {
  EXPECT_EQ(closed_form_R(2, 1), 4);
  EXPECT_EQ(closed_form_R(5, 0), 1);
  EXPECT_EQ(closed_form_R(3, 2), 12);
}

TEST(ClosedFormR, MatchesBothCounts) {
  for (long k = 1; k <= 6; ++k) {
    for (long A = 0; A <= 12; ++A) {
      Rational t(A * k * (k + 1));
      BigInt want = closed_form_R(k, A);
      EXPECT_EQ(lattice_count(k, (k + 1) * (k + 1), t, CountMode::BruteForce), want);
      EXPECT_EQ(lattice_count(k + 1, k * (k + 1), t, CountMode::BruteForce), want);
      EXPECT_EQ(oracle::lattice_points(k, (k + 1) * (k + 1), t), want.get_si());
    }
  }
}

TEST(Pick, Examples) {
  EXPECT_TRUE(pick_check({P("0", "0"), P("2", "0"), P("0", "2")}, 0, 6));
  EXPECT_TRUE(pick_check({P("0", "0"), P("1", "0"), P("1", "1"), P("0", "1")}, 0, 4));
  EXPECT_FALSE(pick_check({P("0", "0"), P("2", "0"), P("0", "2")}, 1, 6));
  EXPECT_THROW(pick_check({P("0", "0"), P("1/2", "0"), P("0", "2")}, 0, 3), DomainError);
}

TEST(Pick, TrapezoidCount) {
  auto trap = lemma_trapezoid(2, 4);
  std::vector<Point> want{P("0", "0"), P("12", "0"), P("3", "2"), P("0", "2")};
  EXPECT_EQ(trap, want);
  EXPECT_TRUE(pick_self_check(trap));
  LatticeCounts c = count_lattice_points(trap);
  EXPECT_EQ(c.boundary, 18);
  EXPECT_THROW(lemma_trapezoid(2, 2), DomainError);
  for (long k = 1; k <= 5; ++k) {
    for (long A = k + 1; A <= 14; ++A) {
      auto poly = lemma_trapezoid(k, A);
      EXPECT_TRUE(pick_self_check(poly)) << k << " " << A;
      auto counted = count_lattice_points(poly);
      auto rows = oracle::convex_row_counts(poly);
      EXPECT_EQ(counted.interior, rows.interior);
      EXPECT_EQ(counted.boundary, rows.boundary);
    }
  }
}

TEST(Pick, RandomTrianglesAndTrapezoids) {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<long> coord(0, 12);
  int done = 0;
  while (done < 100) {
    std::vector<Point> poly;
    if (done % 2 == 0) {
      Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
      Rational turn = cross(b - a, c - a);
      if (turn.sign() == 0) continue;
      poly = turn.sign() > 0 ? std::vector<Point>{a, b, c} : std::vector<Point>{a, c, b};
    } else {
      long y0 = coord(rng), h = coord(rng) + 1;
      long x0 = coord(rng), w0 = coord(rng) + 1, x1 = coord(rng), w1 = coord(rng) + 1;
      poly = {Point{x0, y0}, Point{x0 + w0, y0}, Point{x1 + w1, y0 + h}, Point{x1, y0 + h}};
    }
    ++done;
    auto rows = oracle::convex_row_counts(poly);
    EXPECT_TRUE(pick_check(poly, rows.interior, rows.boundary));
    auto counted = count_lattice_points(poly);
    EXPECT_EQ(counted.interior, rows.interior);
    EXPECT_EQ(counted.boundary, rows.boundary);
    EXPECT_TRUE(pick_self_check(poly));
  }
}

TEST(EmbeddingCheck, Examples) {
  auto ok = embedding_check(1, 4, 2, 2, 2000);
  EXPECT_EQ(ok.kind, EmbeddingReport::Kind::NoObstructionUpTo);
  EXPECT_EQ(ok.horizon, 2000u);
  EXPECT_EQ(ok.source_volume, Rational(2));
  EXPECT_EQ(ok.target_volume, Rational(2));

  auto bad = embedding_check(1, 5, 2, 2, 100);
  EXPECT_EQ(bad.kind, EmbeddingReport::Kind::ObstructedAt);
  EXPECT_EQ(bad.index, 5u);
  EXPECT_EQ(bad.source_value, Rational(5));
  EXPECT_EQ(bad.target_value, Rational(4));

  EXPECT_EQ(embedding_check(1, 1, 1, 1, 50).kind, EmbeddingReport::Kind::NoObstructionUpTo);
}

TEST(EmbeddingCheck, VolumeIsReportedWhenSequencesAgreeEarly) {
  // N(1,100) and N(1,1) agree at index 1 but the volume 50 > 1/2 rules it out
  auto r = embedding_check(1, 100, 1, 1, 1);
  EXPECT_EQ(r.kind, EmbeddingReport::Kind::ObstructedByVolume);
}

TEST(EmbeddingCheck, SwapInvariance) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    Rational c = abs(random_rational(rng, 0, 3, 4)) + Q("1/2");
    Rational d = abs(random_rational(rng, 0, 3, 4)) + Q("1/2");
    Rational a = abs(random_rational(rng, 0, 3, 4)) + Q("1/2");
    Rational b = abs(random_rational(rng, 0, 3, 4)) + Q("1/2");
    auto base = embedding_check(c, d, a, b, 200);
    EXPECT_EQ(embedding_check(d, c, a, b, 200).kind, base.kind);
    EXPECT_EQ(embedding_check(c, d, b, a, 200).kind, base.kind);
    EXPECT_EQ(embedding_check(d, c, b, a, 200).index, base.index);
  }
}

TEST(ClaimBC, Examples) {
  ClaimBC x = claim_bc(3, 5);
  EXPECT_EQ(x.b, 1);
  EXPECT_EQ(x.B, 1);
  EXPECT_EQ(x.c, 3);
  EXPECT_EQ(x.C, 3);
  ClaimBC y = claim_bc(4, 15);
  EXPECT_EQ(y.B, 0);
  EXPECT_EQ(y.C, 0);
  ClaimBC z = claim_bc(2, 4);
  EXPECT_EQ(z.b, 1);
  EXPECT_EQ(z.B, 1);
  EXPECT_EQ(z.c, 2);
  EXPECT_EQ(z.C, 2);
}

TEST(ClaimBC, DichotomyHoldsOnRange) {
  for (long k = 1; k <= 10; ++k) {
    for (long A = 0; A <= 50; ++A) {
      ClaimBC v = claim_bc(k, A);
      // recompute independently
      long b = A / (k + 1), B = A - b * (k + 1);
      long c = (A * k) / (k + 1), C = A * k - c * (k + 1);
      EXPECT_EQ(v.b, b);
      EXPECT_EQ(v.B, B);
      EXPECT_EQ(v.c, c);
      EXPECT_EQ(v.C, C);
      EXPECT_TRUE((B == 0 && C == 0) || B + C == k + 1);
      if (B > 0) EXPECT_EQ((B * k) / (k + 1), B - 1);
    }
  }
}

TEST(PropEmbedding, Examples) {
  EXPECT_TRUE(verify_prop_embedding(1, 100));
  EXPECT_TRUE(verify_prop_embedding(2, 180));
  EXPECT_TRUE(verify_prop_embedding(5, 900));
}

TEST(PropEmbedding, SequenceComparison) {
  for (long k = 1; k <= 3; ++k) {
    auto lhs = cap_sequence(k, (k + 1) * (k + 1), 2000).entries;
    auto rhs = cap_sequence(k + 1, k * (k + 1), 2000).entries;
    for (std::size_t j = 0; j < lhs.size(); ++j) ASSERT_LE(lhs[j], rhs[j]) << "k=" << k << " j=" << j;
  }
}
