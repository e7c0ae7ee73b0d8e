#include "shapelift/pathlift.hpp"

#include <algorithm>

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

const Region kPositive = Region::of({form_gt(1, 0, 0), form_gt(0, 1, 0)});

bool vertices_satisfy(const PolyPath& path, bool strict_reduced) {
  for (const Point& v : path.vertices()) {
    if (v.r.sign() <= 0 || v.s.sign() <= 0) return false;
    if (strict_reduced ? !(v.r < v.s) : v.s < v.r) return false;
  }
  return true;
}

Interval whole(const PolyPath& path) { return Interval::closed(0, path.end_param()); }

void add_affine_root(std::vector<Rational>& out, const Rational& g0, const Rational& g1) {
  if (g0 == g1) return;
  Rational tau = g0 / (g0 - g1);
  if (tau.sign() >= 0 && tau <= 1) out.push_back(tau);
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (mpz_perfect_square_p(x.num().get_mpz_t()) == 0 || mpz_perfect_square_p(x.den().get_mpz_t()) == 0) {
    return false;
  }
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), x.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.den().get_mpz_t());
  root = Rational(n, d);
  return true;
}

/// Rational bracket lo < sqrt(x) < hi of width 1/(den * 2^40).
std::pair<Rational, Rational> sqrt_bracket(const Rational& x) {
  BigInt scale = BigInt(1) << 40;
  BigInt radicand = x.num() * x.den() * scale * scale;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  BigInt den = x.den() * scale;
  return {Rational(s, den), Rational(s + 1, den)};
}

void add_quadratic_roots(std::vector<Rational>& out, const Rational& A, const Rational& B, const Rational& C) {
  if (A.sign() == 0) {
    if (B.sign() != 0) {
      Rational tau = -C / B;
      if (tau.sign() >= 0 && tau <= 1) out.push_back(tau);
    }
    return;
  }
  Rational disc = B * B - 4 * A * C;
  if (disc.sign() < 0) return;
  auto keep = [&](const Rational& tau) {
    if (tau.sign() >= 0 && tau <= 1) out.push_back(tau);
  };
  Rational root;
  if (rational_sqrt(disc, root)) {
    keep((-B - root) / (2 * A));
    keep((-B + root) / (2 * A));
    return;
  }
  auto [lo, hi] = sqrt_bracket(disc);
  for (const Rational& s : {lo, hi}) {
    keep((-B - s) / (2 * A));
    keep((-B + s) / (2 * A));
  }
}

/// Parameters along a segment where some ingredient of the toric q-test
/// changes sign. Between consecutive values the test is constant.
std::vector<Rational> toric_critical_taus(const ToricPL& pl, const Point& a, const Point& b) {
  std::vector<Rational> out{0, 1};
  auto lin = [&](const Rational& alpha, const Rational& beta, const Rational& c) {
    add_affine_root(out, alpha * a.r + beta * a.s + c, alpha * b.r + beta * b.s + c);
  };
  const auto& prof = pl.profile;
  lin(2, 0, -prof.back().r);
  lin(1, 1, -prof.front().s);
  for (std::size_t j = 0; j + 1 < prof.size(); ++j) {
    Rational m = (prof[j + 1].s - prof[j].s) / (prof[j + 1].r - prof[j].r);
    lin(1 - m, 1, -(prof[j].s - m * prof[j].r));
  }
  Rational dr = b.r - a.r;
  Rational ds = b.s - a.s;
  for (const Point& v : prof) {
    if (v.r.sign() <= 0) continue;
    lin(1, 0, -v.r);
    lin(2, 0, -v.r);
    Rational A = (dr + ds) * 2 * dr;
    Rational B = (a.r + a.s) * 2 * dr + (dr + ds) * (2 * a.r - v.r) - v.s * dr;
    Rational C = (a.r + a.s) * (2 * a.r - v.r) - v.s * a.r;
    add_quadratic_roots(out, A, B, C);
  }
  return out;
}

bool q_holds_at(const ToricDomain& X, const PolyPath& path, const Rational& t) {
  Point p = path.at(t);
  return p.r.sign() > 0 && p.s.sign() > 0 && q_in_interior(X, p.r, p.s);
}

/// A parameter in `domain` where q(r_t, s_t) sits inside the image: the
/// leftmost-ish one, or the rightmost-ish one.
std::optional<Rational> find_q_point(const ToricDomain& X, const PolyPath& path, const IntervalSet& domain,
                                     bool rightmost) {
  if (!X.as_toric_pl()) {
    IntervalSet feasible = param_set(path, q_interior_region(X).intersect(kPositive)).intersect(domain);
    if (feasible.empty()) return std::nullopt;
    return rightmost ? feasible.components().back().rightish_point()
                     : feasible.components().front().leftish_point();
  }
  const ToricPL& pl = *X.as_toric_pl();
  std::vector<Interval> comps = domain.components();
  if (rightmost) std::reverse(comps.begin(), comps.end());
  for (const Interval& c : comps) {
    std::vector<Rational> marks{c.lo, c.hi};
    for (std::size_t i = 0; i < path.segment_count(); ++i) {
      Rational base(static_cast<long>(i));
      if (base + 1 < c.lo || c.hi < base) continue;
      for (const Rational& tau : toric_critical_taus(pl, path.vertices()[i], path.vertices()[i + 1])) {
        Rational t = base + tau;
        if (c.lo <= t && t <= c.hi) marks.push_back(t);
      }
    }
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    std::vector<Rational> probes;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (c.contains(marks[i])) probes.push_back(marks[i]);
      if (i + 1 < marks.size()) probes.push_back(midpoint(marks[i], marks[i + 1]));
    }
    if (rightmost) std::reverse(probes.begin(), probes.end());
    for (const Rational& t : probes) {
      if (q_holds_at(X, path, t)) return t;
    }
  }
  return std::nullopt;
}

IntervalSet diagonal_set(const ToricDomain& X, const PolyPath& path) {
  return param_set(path, q_diagonal_region(X).intersect(kPositive));
}

std::optional<CertificatePiece> type_two_between(const ToricDomain& X, const PolyPath& path,
                                                 const IntervalSet& inside, const IntervalSet& diag,
                                                 const Rational& t0, const Rational& t1, bool last) {
  auto start = inside.component_containing(t0);
  auto suffix = diag.component_containing(t1);
  if (!start || !suffix) return std::nullopt;
  if (!last && !q_holds_at(X, path, t1)) return std::nullopt;
  IntervalSet window = IntervalSet(*start).intersect(*suffix).intersect(Interval::closed(t0, t1));
  auto t_star = find_q_point(X, path, window, true);
  if (!t_star) return std::nullopt;
  return CertificatePiece{PieceKind::TypeII, t0, t1, t_star};
}

}  // namespace

const char* to_string(PieceKind k) { return k == PieceKind::TypeI ? "type_i" : "type_ii"; }

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Inside: return "inside";
    case Criterion::Theorem: return "theorem";
    case Criterion::General: return "general";
  }
  return "?";
}

const char* to_string(LiftVerdict::Kind k) {
  switch (k) {
    case LiftVerdict::Kind::Lifts: return "lifts";
    case LiftVerdict::Kind::Obstructed: return "obstructed";
    case LiftVerdict::Kind::Undetermined: return "undetermined";
  }
  return "?";
}

bool supports_shape(const ToricDomain& X) {
  switch (X.family()) {
    case Family::Ball:
    case Family::Polydisk: return true;
    case Family::Ellipsoid: {
      auto k = X.integral_ratio();
      return k && *k >= 2;
    }
    case Family::ToricPL: return false;
  }
  return false;
}

IntervalSet inside_set(const ToricDomain& X, const PolyPath& path) {
  return param_set(path, moment_region(X, kOpenReducedPositive));
}

std::optional<std::string> obstruction_precondition_failure(const ShapeRegion& X, const PolyPath& path) {
  const ToricDomain& D = X.domain();
  if (!moment_contains(D, path.front(), kOpenReducedPositive)) return "start in reduced moment image";
  if (moment_contains(D, path.back(), kOpenReducedPositive)) return "end outside reduced moment image";
  if (!vertices_satisfy(path, false)) return "0 < r <= s along path";
  if (!param_set(path, shape_region_reduced(X)).covers(whole(path))) return "path inside reduced shape invariant";
  return std::nullopt;
}

std::optional<ObstructionWitness> obstruction_I(const ShapeRegion& X, const PolyPath& path) {
  if (auto failed = obstruction_precondition_failure(X, path)) {
    throw DomainError("obstruction precondition failed: " + *failed);
  }
  ObstructionWitness w;
  w.family = X.family();
  w.form = knot_form(X);
  w.prefix_end = path.end_param();
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    Trend t = segment_ratio_trend(path.segment(i));
    if (t == Trend::NonDecreasing) return std::nullopt;
    w.ratio_trends.push_back(t);
  }
  w.form_min = linear_extrema_on_path(w.form.alpha, w.form.beta, path).min;
  if (w.form_min < w.form.bound) return std::nullopt;
  return w;
}

Region sufficiency_clause_region(const ShapeRegion& X) {
  const ToricDomain& D = X.domain();
  switch (X.family()) {
    case Family::Ball: return Region::of({form_lt(2, 1, D.as_ball()->R)});
    case Family::Ellipsoid: {
      const Ellipsoid& e = *D.as_ellipsoid();
      Rational k = X.k();
      return Region({{form_le(k - 1, -1, 0), form_lt(k + 1, 1, e.b)}, {form_gt(k - 1, -1, 0), form_lt(2, 0, e.a)}});
    }
    case Family::Polydisk: return Region::of({form_lt(1, 1, D.as_polydisk()->d)});
    case Family::ToricPL: break;
  }
  throw InternalError("sufficiency clause on unsupported family");
}

std::optional<LiftCertificate> sufficiency_II(const ShapeRegion& X, const PolyPath& path) {
  const ToricDomain& D = X.domain();
  if (!moment_contains(D, path.front(), kOpenReducedPositive)) {
    throw DomainError("path must start in the reduced moment image");
  }
  if (!vertices_satisfy(path, false)) throw DomainError("path must satisfy 0 < r <= s");
  Rational T = path.end_param();
  auto prefix = inside_set(D, path).component_containing(0);
  IntervalSet clause = param_set(path, sufficiency_clause_region(X).intersect(kPositive));
  auto suffix = param_set(path, Region::of({form_lt(1, 0, strip_bound(X))})).component_containing(T);
  if (!prefix || !suffix) return std::nullopt;
  IntervalSet feasible = clause.intersect(*prefix).intersect(*suffix);
  if (feasible.empty()) return std::nullopt;
  Rational t_star = feasible.components().front().leftish_point();
  return LiftCertificate{Criterion::Theorem, {CertificatePiece{PieceKind::TypeII, 0, T, t_star}}};
}

std::optional<LiftCertificate> general_criterion(const ToricDomain& X, const PolyPath& path,
                                                 const std::optional<std::vector<Rational>>& breakpoints) {
  if (!vertices_satisfy(path, true)) throw DomainError("general criterion needs 0 < r < s along the path");
  if (!moment_contains(X, path.front(), kOpenReducedPositive)) {
    throw DomainError("path must start in the reduced moment image");
  }
  const Rational T = path.end_param();
  IntervalSet inside = inside_set(X, path);
  IntervalSet diag = diagonal_set(X, path);
  LiftCertificate cert{Criterion::General, {}};

  if (breakpoints) {
    std::vector<Rational> marks{0};
    for (const Rational& b : *breakpoints) {
      if (!(marks.back() < b) || !(b < T)) throw DomainError("breakpoints must increase strictly inside (0, T)");
      marks.push_back(b);
    }
    marks.push_back(T);
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
      const Rational& t0 = marks[i];
      const Rational& t1 = marks[i + 1];
      if (inside.covers(Interval::closed(t0, t1))) {
        cert.pieces.push_back({PieceKind::TypeI, t0, t1, std::nullopt});
        continue;
      }
      auto piece = type_two_between(X, path, inside, diag, t0, t1, i + 2 == marks.size());
      if (!piece) return std::nullopt;
      cert.pieces.push_back(*piece);
    }
    return cert;
  }

  Rational cur = 0;
  while (true) {
    if (inside.covers(Interval::closed(cur, T))) {
      cert.pieces.push_back({PieceKind::TypeI, cur, T, std::nullopt});
      break;
    }
    auto start = inside.component_containing(cur);
    if (!start) return std::nullopt;
    IntervalSet window = diag.intersect(*start).intersect(Interval::closed(cur, T));
    auto t_star = find_q_point(X, path, window, true);
    if (!t_star) return std::nullopt;
    Interval reach = *diag.component_containing(*t_star);
    if (reach.hi == T && reach.hi_closed) {
      cert.pieces.push_back({PieceKind::TypeII, cur, T, t_star});
      break;
    }
    IntervalSet reentry = inside.intersect(reach).intersect(Interval{start->hi, T, false, true});
    auto t1 = find_q_point(X, path, reentry, false);
    if (!t1) return std::nullopt;
    cert.pieces.push_back({PieceKind::TypeII, cur, *t1, t_star});
    cur = *t1;
  }
  return cert;
}

LiftVerdict classify(const ToricDomain& X, const PolyPath& path) {
  if (!moment_contains(X, path.front(), kOpenReducedPositive)) {
    throw DomainError("path must start in the reduced moment image");
  }
  const Rational T = path.end_param();
  IntervalSet inside = inside_set(X, path);
  LiftVerdict out;
  if (inside.covers(Interval::closed(0, T))) {
    out.kind = LiftVerdict::Kind::Lifts;
    out.certificate = LiftCertificate{Criterion::Inside, {{PieceKind::TypeI, 0, T, std::nullopt}}};
    return out;
  }
  std::optional<ShapeRegion> shape;
  if (supports_shape(X)) shape.emplace(X);
  if (shape && vertices_satisfy(path, false)) {
    if (auto cert = sufficiency_II(*shape, path)) {
      out.kind = LiftVerdict::Kind::Lifts;
      out.certificate = std::move(cert);
      return out;
    }
  }
  if (vertices_satisfy(path, true)) {
    if (auto cert = general_criterion(X, path)) {
      out.kind = LiftVerdict::Kind::Lifts;
      out.certificate = std::move(cert);
      return out;
    }
  }
  if (shape) {
    Rational exit = inside.component_containing(0)->hi;
    PolyPath prefix = path.sub_path(0, exit);
    if (!obstruction_precondition_failure(*shape, prefix)) {
      if (auto w = obstruction_I(*shape, prefix)) {
        w->prefix_end = exit;
        out.kind = LiftVerdict::Kind::Obstructed;
        out.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

std::string certificate_failure(const ToricDomain& X, const PolyPath& path, const LiftCertificate& cert) {
  const Rational T = path.end_param();
  if (cert.pieces.empty()) return "certificate has no pieces";
  if (cert.pieces.front().t0.sign() != 0) return "first piece must start at 0";
  if (cert.pieces.back().t1 != T) return "last piece must end at T";
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    if (!(cert.pieces[i].t0 < cert.pieces[i].t1)) return "piece " + std::to_string(i) + " is empty";
    if (i > 0 && cert.pieces[i].t0 != cert.pieces[i - 1].t1) return "pieces are not contiguous";
  }
  if (cert.criterion == Criterion::Inside && cert.pieces.size() != 1) return "inside certificate has one piece";

  std::optional<ShapeRegion> shape;
  if (cert.criterion == Criterion::Theorem) {
    if (!supports_shape(X)) return "theorem certificate on unsupported domain";
    if (!vertices_satisfy(path, false)) return "theorem certificate needs 0 < r <= s";
    shape.emplace(X);
  }
  if (cert.criterion == Criterion::General && !vertices_satisfy(path, true)) {
    return "general certificate needs 0 < r < s";
  }
  IntervalSet inside = inside_set(X, path);
  IntervalSet diag;
  if (cert.criterion == Criterion::General) diag = diagonal_set(X, path);

  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    const CertificatePiece& p = cert.pieces[i];
    std::string tag = "piece " + std::to_string(i) + ": ";
    bool last = i + 1 == cert.pieces.size();
    if (p.kind == PieceKind::TypeI) {
      if (!inside.covers(Interval::closed(p.t0, p.t1))) return tag + "type-I piece leaves the image";
      continue;
    }
    if (cert.criterion == Criterion::Inside) return tag + "inside certificate has a type-II piece";
    if (!p.t_star) return tag + "type-II piece lacks t_star";
    const Rational& ts = *p.t_star;
    if (ts < p.t0 || p.t1 < ts) return tag + "t_star outside the piece";
    if (!inside.covers(Interval::closed(p.t0, ts))) return tag + "prefix leaves the image";
    if (shape) {
      if (!sufficiency_clause_region(*shape).contains(path.at(ts))) return tag + "clause fails at t_star";
      IntervalSet strip = param_set(path, Region::of({form_lt(1, 0, strip_bound(*shape))}));
      if (!strip.covers(Interval::closed(ts, p.t1))) return tag + "suffix leaves the strip";
    } else {
      if (!q_holds_at(X, path, ts)) return tag + "q(r, s) not inside at t_star";
      if (!diag.covers(Interval::closed(ts, p.t1))) return tag + "q(r, r) not inside along the suffix";
      if (!last && !q_holds_at(X, path, p.t1)) return tag + "q(r, s) not inside at the breakpoint";
    }
  }
  return "";
}

}  // namespace shapelift
