#include "shapelift/shape.hpp"

#include <utility>

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

void require_positive_point(const Point& p) {
  if (p.r.sign() <= 0 || p.s.sign() <= 0) {
    throw DomainError("point needs positive coordinates, got (" + p.r.str() + ", " + p.s.str() + ")");
  }
}

void require_reduced(const Point& p) {
  require_positive_point(p);
  if (p.s < p.r) throw DomainError("point must satisfy r <= s, got (" + p.r.str() + ", " + p.s.str() + ")");
}

Region shape_clauses(const ShapeRegion& X) {
  const ToricDomain& D = X.domain();
  Rational strip = strip_bound(X);
  switch (X.family()) {
    case Family::Ball:
      return Region({{form_lt(1, 1, D.as_ball()->R)}, {form_lt(1, 0, strip)}});
    case Family::Ellipsoid: {
      const Ellipsoid& e = *D.as_ellipsoid();
      return Region({{form_lt(e.b, e.a, e.a * e.b)}, {form_lt(1, 0, strip)}});
    }
    case Family::Polydisk: {
      const Polydisk& p = *D.as_polydisk();
      return Region({{form_lt(1, 0, p.c), form_lt(0, 1, p.d)}, {form_lt(1, 0, strip)}});
    }
    case Family::ToricPL: break;
  }
  throw InternalError("shape region on unsupported family");
}

}  // namespace

ShapeRegion::ShapeRegion(ToricDomain X) : X_(std::move(X)) {
  switch (X_.family()) {
    case Family::Ball: k_ = 1; break;
    case Family::Ellipsoid: {
      auto k = X_.integral_ratio();
      if (!k || *k < 2) {
        throw DomainError("shape invariant needs an ellipsoid E(a, ka) with integral k >= 2, got " + X_.describe());
      }
      k_ = Rational(*k);
      break;
    }
    case Family::Polydisk: k_ = X_.as_polydisk()->d / X_.as_polydisk()->c; break;
    case Family::ToricPL:
      throw DomainError("shape invariant is only known for balls, integral ellipsoids and polydisks");
  }
}

AffineForm knot_form(const ShapeRegion& X) {
  switch (X.family()) {
    case Family::Ball: return {2, 1, X.domain().as_ball()->R};
    case Family::Ellipsoid: return {X.k() + 1, 1, X.domain().as_ellipsoid()->b};
    case Family::Polydisk: return {1, 1, X.domain().as_polydisk()->d};
    case Family::ToricPL: break;
  }
  throw InternalError("knot form on unsupported family");
}

Rational strip_bound(const ShapeRegion& X) {
  switch (X.family()) {
    case Family::Ball: return X.domain().as_ball()->R / Rational(3);
    case Family::Ellipsoid: return X.domain().as_ellipsoid()->a / Rational(2);
    case Family::Polydisk: return X.domain().as_polydisk()->c / Rational(2);
    case Family::ToricPL: break;
  }
  throw InternalError("strip bound on unsupported family");
}

Region shape_region_reduced(const ShapeRegion& X) {
  Region base = Region::of({form_gt(1, 0, 0), form_gt(0, 1, 0), form_le(1, -1, 0)});
  return base.intersect(shape_clauses(X));
}

bool shape_member(const ShapeRegion& X, Point p) {
  require_positive_point(p);
  if (p.s < p.r) std::swap(p.r, p.s);
  return shape_clauses(X).contains(p);
}

bool knotted_member(const ShapeRegion& X, const Point& p) {
  require_reduced(p);
  AffineForm form = knot_form(X);
  if (!moment_contains(X.domain(), p, kOpenImage)) return false;
  switch (X.family()) {
    case Family::Ball:
      if (3 * p.r > X.domain().as_ball()->R) return false;
      break;
    case Family::Ellipsoid:
      if (2 * p.r > X.domain().as_ellipsoid()->a) return false;
      break;
    case Family::Polydisk:
      if (2 * p.r > X.domain().as_polydisk()->c) return false;
      break;
    case Family::ToricPL: break;
  }
  return form.eval(p) > form.bound;
}

bool emb_knotted_member(const ShapeRegion& target, const Rational& x, const Point& p) {
  const ToricDomain& D = target.domain();
  switch (target.family()) {
    case Family::Ball: {
      const Rational& R = D.as_ball()->R;
      if (!(1 < R && R < x)) throw DomainError("needs 1 < R < x for a ball target");
      break;
    }
    case Family::Ellipsoid: {
      const Ellipsoid& e = *D.as_ellipsoid();
      if (!(1 < e.a && e.b < x)) throw DomainError("needs 1 < a and b = ka < x for an ellipsoid target");
      break;
    }
    case Family::Polydisk: {
      const Polydisk& pd = *D.as_polydisk();
      if (!(1 <= pd.c && pd.d < x)) throw DomainError("needs 1 <= c <= d < x for a polydisk target");
      break;
    }
    case Family::ToricPL: break;
  }
  require_reduced(p);
  ToricDomain source = ToricDomain::ellipsoid(1, x);
  if (!moment_contains(source, p, kOpenReducedPositive)) return false;
  if (!moment_contains(D, p, kOpenReducedPositive)) return false;
  AffineForm form = knot_form(target);
  return form.eval(p) > form.bound;
}

Rational unknotted_threshold(Family family, const Rational& x, const Rational& k) {
  if (x.sign() <= 0) throw DomainError("threshold needs x > 0");
  switch (family) {
    case Family::Ball: return 3 * x / (x + 1);
    case Family::Ellipsoid:
      if (!k.is_integer() || k < 2) throw DomainError("ellipsoid threshold needs integral k >= 2");
      return 2 * x / (x + k - 1);
    case Family::Polydisk:
      if (k.sign() <= 0) throw DomainError("polydisk threshold needs k > 0");
      return 2 * x / (x + 2 * k - 1);
    case Family::ToricPL: break;
  }
  throw DomainError("no threshold for toric_pl");
}

}  // namespace shapelift
