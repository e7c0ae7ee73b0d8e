#pragma once

#include <string>
#include <vector>

#include "shapelift/geometry.hpp"

namespace shapelift {

/// The first entries of N(a, b): all m*a + n*b with m, n >= 0, sorted with
/// repetitions. Index origin 0, so entries[0] = 0.
struct CapSequence {
  Rational a;
  Rational b;
  std::vector<Rational> entries;
};

CapSequence cap_sequence(const Rational& a, const Rational& b, std::size_t K);

/// k-th ECH capacity of E(a, b), origin 0.
Rational ech_capacity(const Rational& a, const Rational& b, std::size_t k);

enum class CountMode { RowSum, BruteForce };

/// #{(i, j) in Z_{>=0}^2 : a i + b j <= t}.
BigInt lattice_count(const Rational& a, const Rational& b, const Rational& t, CountMode mode = CountMode::RowSum);

/// k A (A+1) / 2 + (A + 1).
BigInt closed_form_R(long k, long A);

struct LatticeCounts {
  BigInt interior;
  BigInt boundary;
  Rational area;
};

/// Counts lattice points of a simple polygon with integer vertices by
/// enumerating its bounding box.
LatticeCounts count_lattice_points(const std::vector<Point>& polygon);

/// I + B/2 = area + 1 with the supplied counts.
bool pick_check(const std::vector<Point>& polygon, const BigInt& interior, const BigInt& boundary);
bool pick_self_check(const std::vector<Point>& polygon);

/// The trapezoid cut from Delta_{k,(k+1)^2}(A k (k+1)): vertices (0,0),
/// (A(k+1),0), (B(k+1), bk), (0, bk). Needs b = floor(A/(k+1)) >= 1.
std::vector<Point> lemma_trapezoid(long k, long A);

struct EmbeddingReport {
  enum class Kind { NoObstructionUpTo, ObstructedAt, ObstructedByVolume };
  Kind kind = Kind::NoObstructionUpTo;
  std::size_t horizon = 0;
  std::size_t index = 0;
  Rational source_value;
  Rational target_value;
  Rational source_volume;
  Rational target_volume;
};

const char* to_string(EmbeddingReport::Kind k);

/// Compares N(c, d) against N(a, b) up to index K, then volumes. A clean
/// report never certifies that E(c, d) embeds into E(a, b).
EmbeddingReport embedding_check(const Rational& c, const Rational& d, const Rational& a, const Rational& b,
                                std::size_t K);

struct ClaimBC {
  long b;
  long B;
  long c;
  long C;
};

ClaimBC claim_bc(long k, long A);

/// R_{k,(k+1)^2}(t) >= R_{k+1,k(k+1)}(t) at every t = j(k+1) <= T.
bool verify_prop_embedding(long k, const Rational& T);

}  // namespace shapelift
