#include "shapelift/echlattice.hpp"

#include <algorithm>

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

BigInt lcm(const BigInt& x, const BigInt& y) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

BigInt fdiv(const BigInt& x, const BigInt& y) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

BigInt gcd(const BigInt& x, const BigInt& y) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

struct Scaled {
  BigInt a;
  BigInt b;
  BigInt t;
  BigInt scale;
};

Scaled clear_denominators(const Rational& a, const Rational& b, const Rational& t) {
  BigInt L = lcm(lcm(a.den(), b.den()), t.den());
  return {(a * Rational(L)).num(), (b * Rational(L)).num(), (t * Rational(L)).num(), L};
}

BigInt row_sum(const BigInt& a, const BigInt& b, const BigInt& t) {
  if (t < 0) return 0;
  BigInt total = 0;
  for (BigInt rest = t; rest >= 0; rest -= b) total += fdiv(rest, a) + 1;
  return total;
}

BigInt brute_force(const BigInt& a, const BigInt& b, const BigInt& t) {
  BigInt total = 0;
  for (BigInt i = 0; a * i <= t; ++i) {
    for (BigInt j = 0; a * i + b * j <= t; ++j) ++total;
  }
  return total;
}

void require_positive(const Rational& v, const char* what) {
  if (v.sign() <= 0) throw DomainError(std::string(what) + " must be positive, got " + v.str());
}

/// Integer point (x, y) on the closed segment p-q.
bool on_segment(const Point& p, const Point& q, const Point& x) {
  if (cross(q - p, x - p).sign() != 0) return false;
  return min(p.r, q.r) <= x.r && x.r <= max(p.r, q.r) && min(p.s, q.s) <= x.s && x.s <= max(p.s, q.s);
}

/// Even-odd test for a point not on the boundary.
bool strictly_inside(const std::vector<Point>& poly, const Point& x) {
  bool in = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    if ((p.s > x.s) != (q.s > x.s)) {
      Rational cross_r = p.r + (x.s - p.s) * (q.r - p.r) / (q.s - p.s);
      if (x.r < cross_r) in = !in;
    }
  }
  return in;
}

void require_lattice(const std::vector<Point>& polygon) {
  if (polygon.size() < 3) throw DomainError("lattice polygon needs at least three vertices");
  for (const Point& v : polygon) {
    if (!v.r.is_integer() || !v.s.is_integer()) {
      throw DomainError("lattice polygon has non-integer vertex (" + v.r.str() + ", " + v.s.str() + ")");
    }
  }
}

}  // namespace

CapSequence cap_sequence(const Rational& a, const Rational& b, std::size_t K) {
  require_positive(a, "a");
  require_positive(b, "b");
  Scaled s = clear_denominators(a, b, 0);
  const BigInt need = BigInt(static_cast<unsigned long>(K)) + 1;
  BigInt lo = 0;
  BigInt hi = std::min(s.a, s.b) * BigInt(static_cast<unsigned long>(K));
  while (lo < hi) {
    BigInt mid = fdiv(lo + hi, 2);
    if (row_sum(s.a, s.b, mid) >= need) hi = mid;
    else lo = mid + 1;
  }
  std::vector<BigInt> values;
  for (BigInt n = 0; s.b * n <= lo; ++n) {
    for (BigInt v = s.b * n; v <= lo; v += s.a) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  CapSequence out{a, b, {}};
  out.entries.reserve(K + 1);
  for (std::size_t i = 0; i <= K; ++i) out.entries.push_back(Rational(values[i], s.scale));
  return out;
}

Rational ech_capacity(const Rational& a, const Rational& b, std::size_t k) {
  return cap_sequence(a, b, k).entries.back();
}

BigInt lattice_count(const Rational& a, const Rational& b, const Rational& t, CountMode mode) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (t.sign() < 0) throw DomainError("lattice count needs t >= 0");
  Scaled s = clear_denominators(a, b, t);
  return mode == CountMode::RowSum ? row_sum(s.a, s.b, s.t) : brute_force(s.a, s.b, s.t);
}

BigInt closed_form_R(long k, long A) {
  if (k < 1 || A < 0) throw DomainError("closed form needs k >= 1 and A >= 0");
  BigInt K(k), AA(A);
  return K * AA * (AA + 1) / 2 + (AA + 1);
}

LatticeCounts count_lattice_points(const std::vector<Point>& polygon) {
  require_lattice(polygon);
  BigInt lo_r = polygon[0].r.num(), hi_r = lo_r, lo_s = polygon[0].s.num(), hi_s = lo_s;
  for (const Point& v : polygon) {
    lo_r = std::min(lo_r, v.r.num());
    hi_r = std::max(hi_r, v.r.num());
    lo_s = std::min(lo_s, v.s.num());
    hi_s = std::max(hi_s, v.s.num());
  }
  LatticeCounts out{0, 0, shoelace_area(polygon)};
  for (BigInt x = lo_r; x <= hi_r; ++x) {
    for (BigInt y = lo_s; y <= hi_s; ++y) {
      Point p{Rational(x), Rational(y)};
      bool boundary = false;
      for (std::size_t i = 0; i < polygon.size() && !boundary; ++i) {
        boundary = on_segment(polygon[i], polygon[(i + 1) % polygon.size()], p);
      }
      if (boundary) ++out.boundary;
      else if (strictly_inside(polygon, p)) ++out.interior;
    }
  }
  return out;
}

bool pick_check(const std::vector<Point>& polygon, const BigInt& interior, const BigInt& boundary) {
  require_lattice(polygon);
  Rational lhs = Rational(interior) + Rational(boundary) / Rational(2);
  return lhs == shoelace_area(polygon) + 1;
}

bool pick_self_check(const std::vector<Point>& polygon) {
  LatticeCounts c = count_lattice_points(polygon);
  BigInt boundary_by_gcd = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    Point d = polygon[(i + 1) % polygon.size()] - polygon[i];
    boundary_by_gcd += gcd(abs(d.r).num(), abs(d.s).num());
  }
  return boundary_by_gcd == c.boundary && pick_check(polygon, c.interior, c.boundary);
}

std::vector<Point> lemma_trapezoid(long k, long A) {
  if (k < 1 || A < 0) throw DomainError("trapezoid needs k >= 1 and A >= 0");
  ClaimBC bc = claim_bc(k, A);
  if (bc.b < 1) throw DomainError("trapezoid degenerates when A < k + 1");
  long width = A * (k + 1);
  long height = bc.b * k;
  long top = bc.B * (k + 1);
  if (top == 0) return {{0, 0}, {width, 0}, {0, height}};
  return {{0, 0}, {width, 0}, {top, height}, {0, height}};
}

const char* to_string(EmbeddingReport::Kind k) {
  switch (k) {
    case EmbeddingReport::Kind::NoObstructionUpTo: return "no_obstruction_up_to";
    case EmbeddingReport::Kind::ObstructedAt: return "obstructed_at";
    case EmbeddingReport::Kind::ObstructedByVolume: return "obstructed_by_volume";
  }
  return "?";
}

EmbeddingReport embedding_check(const Rational& c, const Rational& d, const Rational& a, const Rational& b,
                                std::size_t K) {
  if (K < 1) throw DomainError("embedding check needs horizon K >= 1");
  EmbeddingReport out;
  out.horizon = K;
  out.source_volume = c * d / Rational(2);
  out.target_volume = a * b / Rational(2);
  CapSequence src = cap_sequence(c, d, K);
  CapSequence dst = cap_sequence(a, b, K);
  for (std::size_t k = 0; k <= K; ++k) {
    if (dst.entries[k] < src.entries[k]) {
      out.kind = EmbeddingReport::Kind::ObstructedAt;
      out.index = k;
      out.source_value = src.entries[k];
      out.target_value = dst.entries[k];
      return out;
    }
  }
  if (out.target_volume < out.source_volume) out.kind = EmbeddingReport::Kind::ObstructedByVolume;
  return out;
}

ClaimBC claim_bc(long k, long A) {
  if (k < 1 || A < 0) throw DomainError("claim needs k >= 1 and A >= 0");
  ClaimBC out;
  out.b = A / (k + 1);
  out.B = A - out.b * (k + 1);
  out.c = A * k / (k + 1);
  out.C = A * k - out.c * (k + 1);
  bool dichotomy = (out.B == 0 && out.C == 0) || out.B + out.C == k + 1;
  if (!dichotomy) throw InternalError("B, C dichotomy fails at k=" + std::to_string(k) + " A=" + std::to_string(A));
  if (out.B > 0 && out.B * k / (k + 1) != out.B - 1) {
    throw InternalError("floor(Bk/(k+1)) = B-1 fails at k=" + std::to_string(k) + " A=" + std::to_string(A));
  }
  return out;
}

bool verify_prop_embedding(long k, const Rational& T) {
  if (k < 1 || T.sign() <= 0) throw DomainError("proposition check needs k >= 1 and T > 0");
  Rational step(k + 1);
  Rational lhs_a(k), lhs_b((k + 1) * (k + 1)), rhs_a(k + 1), rhs_b(k * (k + 1));
  for (Rational t = 0; t <= T; t += step) {
    if (lattice_count(lhs_a, lhs_b, t) < lattice_count(rhs_a, rhs_b, t)) return false;
  }
  return true;
}

}  // namespace shapelift
