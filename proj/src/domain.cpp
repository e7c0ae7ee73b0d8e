#include "shapelift/domain.hpp"

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

void require_positive(const Rational& v, const char* name) {
  if (v.sign() <= 0) throw DomainError(std::string(name) + " must be positive, got " + v.str());
}

Region quadrant(MomentQuery q) {
  Cell c;
  if (q.positive) {
    c.push_back(form_gt(1, 0, 0));
    c.push_back(form_gt(0, 1, 0));
  } else {
    c.push_back(form_ge(1, 0, 0));
    c.push_back(form_ge(0, 1, 0));
  }
  if (q.reduced) c.push_back(form_le(1, -1, 0));
  return Region::of(std::move(c));
}

HalfPlane below(const Rational& alpha, const Rational& beta, const Rational& bound, bool closure) {
  return closure ? form_le(alpha, beta, bound) : form_lt(alpha, beta, bound);
}

Rational piece_slope(const ToricPL& pl, std::size_t i) {
  const Point& p = pl.profile[i];
  const Point& q = pl.profile[i + 1];
  return (q.s - p.s) / (q.r - p.r);
}

Region triangle_region(const Rational& a, const Rational& b, bool closure) {
  return Region::of({below(b, a, a * b, closure)});
}

Region shape_of_image(const ToricDomain& X, bool closure) {
  if (auto tri = X.triangle()) return triangle_region(tri->first, tri->second, closure);
  if (const Polydisk* p = X.as_polydisk()) {
    return Region::of({below(1, 0, p->c, closure), below(0, 1, p->d, closure)});
  }
  const ToricPL& pl = *X.as_toric_pl();
  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < pl.profile.size(); ++i) {
    const Point& lo = pl.profile[i];
    const Point& hi = pl.profile[i + 1];
    Rational m = piece_slope(pl, i);
    Cell c;
    if (i > 0) c.push_back(form_ge(1, 0, lo.r));
    c.push_back(below(1, 0, hi.r, closure));
    c.push_back(below(-m, 1, lo.s - m * lo.r, closure));
    cells.push_back(std::move(c));
  }
  return Region(std::move(cells));
}

const AffineMap2 kQVertexWide{2, 0, 0, 0, 0, 0};
const AffineMap2 kQVertexApex{1, 0, 1, 1, 0, 0};
const AffineMap2 kQVertexTop{0, 0, 1, 1, 0, 0};
const AffineMap2 kQDiagWide{2, 0, 0, 0, 0, 0};
const AffineMap2 kQDiagApex{1, 0, 2, 0, 0, 0};
const AffineMap2 kQDiagTop{0, 0, 2, 0, 0, 0};

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Ball: return "ball";
    case Family::Ellipsoid: return "ellipsoid";
    case Family::Polydisk: return "polydisk";
    case Family::ToricPL: return "toric_pl";
  }
  return "?";
}

ToricDomain ToricDomain::ball(Rational R) {
  require_positive(R, "ball capacity R");
  return ToricDomain(Ball{std::move(R)});
}

ToricDomain ToricDomain::ellipsoid(Rational a, Rational b) {
  require_positive(a, "ellipsoid parameter a");
  if (b < a) throw DomainError("ellipsoid needs a <= b, got a=" + a.str() + " b=" + b.str());
  return ToricDomain(Ellipsoid{std::move(a), std::move(b)});
}

ToricDomain ToricDomain::polydisk(Rational c, Rational d) {
  require_positive(c, "polydisk parameter c");
  if (d < c) throw DomainError("polydisk needs c <= d, got c=" + c.str() + " d=" + d.str());
  return ToricDomain(Polydisk{std::move(c), std::move(d)});
}

ToricDomain ToricDomain::toric_pl(std::vector<Point> profile) {
  if (profile.size() < 2) throw DomainError("profile needs at least two points");
  if (profile.front().r.sign() != 0) throw DomainError("profile must start on the s-axis (r_0 = 0)");
  if (profile.back().s.sign() != 0) throw DomainError("profile must end on the r-axis (s_n = 0)");
  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    if (!(profile[i].r < profile[i + 1].r)) {
      throw DomainError("profile r-coordinates must strictly increase at index " + std::to_string(i + 1));
    }
    if (!(profile[i].s > profile[i + 1].s)) {
      throw DomainError("profile s-coordinates must strictly decrease at index " + std::to_string(i + 1));
    }
  }
  return ToricDomain(ToricPL{std::move(profile)});
}

Family ToricDomain::family() const { return static_cast<Family>(v_.index()); }

std::optional<BigInt> ToricDomain::integral_ratio() const {
  if (as_ball()) return BigInt(1);
  if (const Ellipsoid* e = as_ellipsoid()) {
    Rational k = e->b / e->a;
    if (k.is_integer()) return k.num();
  }
  return std::nullopt;
}

std::optional<std::pair<Rational, Rational>> ToricDomain::triangle() const {
  if (const Ball* b = as_ball()) return std::make_pair(b->R, b->R);
  if (const Ellipsoid* e = as_ellipsoid()) return std::make_pair(e->a, e->b);
  return std::nullopt;
}

ToricDomain ToricDomain::scaled(const Rational& lambda) const {
  require_positive(lambda, "scale factor");
  switch (family()) {
    case Family::Ball: return ball(lambda * as_ball()->R);
    case Family::Ellipsoid: return ellipsoid(lambda * as_ellipsoid()->a, lambda * as_ellipsoid()->b);
    case Family::Polydisk: return polydisk(lambda * as_polydisk()->c, lambda * as_polydisk()->d);
    case Family::ToricPL: {
      std::vector<Point> pts;
      for (const Point& p : as_toric_pl()->profile) pts.push_back(lambda * p);
      return toric_pl(std::move(pts));
    }
  }
  throw InternalError("unknown family");
}

std::string ToricDomain::describe() const {
  switch (family()) {
    case Family::Ball: return "B(" + as_ball()->R.str() + ")";
    case Family::Ellipsoid: return "E(" + as_ellipsoid()->a.str() + "," + as_ellipsoid()->b.str() + ")";
    case Family::Polydisk: return "P(" + as_polydisk()->c.str() + "," + as_polydisk()->d.str() + ")";
    case Family::ToricPL: {
      std::string out = "PL[";
      for (std::size_t i = 0; i < as_toric_pl()->profile.size(); ++i) {
        const Point& p = as_toric_pl()->profile[i];
        if (i) out += ",";
        out += "(" + p.r.str() + "," + p.s.str() + ")";
      }
      return out + "]";
    }
  }
  return "?";
}

Region moment_region(const ToricDomain& X, MomentQuery q) {
  return quadrant(q).intersect(shape_of_image(X, q.closure));
}

bool moment_contains(const ToricDomain& X, const Point& p, MomentQuery q) {
  return moment_region(X, q).contains(p);
}

ConvexPolygon q_polygon(const Rational& a, const Rational& b) {
  require_positive(a, "q-polygon parameter a");
  if (b < a) throw DomainError("q-polygon needs a <= b");
  return ConvexPolygon({{0, 0}, {2 * a, 0}, {a, a + b}, {0, a + b}});
}

Rational volume(const ToricDomain& X) {
  switch (X.family()) {
    case Family::Ball: return X.as_ball()->R * X.as_ball()->R / Rational(2);
    case Family::Ellipsoid: return X.as_ellipsoid()->a * X.as_ellipsoid()->b / Rational(2);
    case Family::Polydisk: return X.as_polydisk()->c * X.as_polydisk()->d;
    case Family::ToricPL: {
      std::vector<Point> outline = image_outline(X);
      return shoelace_area(outline);
    }
  }
  throw InternalError("unknown family");
}

std::vector<Point> image_outline(const ToricDomain& X) {
  if (auto tri = X.triangle()) return {{0, 0}, {tri->first, 0}, {0, tri->second}};
  if (const Polydisk* p = X.as_polydisk()) return {{0, 0}, {p->c, 0}, {p->c, p->d}, {0, p->d}};
  const auto& prof = X.as_toric_pl()->profile;
  std::vector<Point> out{{0, 0}};
  out.insert(out.end(), prof.rbegin(), prof.rend());
  return out;
}

Rational profile_height(const ToricPL& pl, const Rational& r) {
  const auto& prof = pl.profile;
  if (r.sign() < 0 || r > prof.back().r) throw DomainError("profile evaluated outside [0, r_n]");
  for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
    if (r <= prof[i + 1].r) return prof[i].s + piece_slope(pl, i) * (r - prof[i].r);
  }
  return 0;
}

bool q_in_interior(const ToricDomain& X, const Rational& r, const Rational& s) {
  if (r.sign() <= 0 || s.sign() <= 0) throw DomainError("q-polygon needs positive r and s");
  if (const ToricPL* pl = X.as_toric_pl()) {
    const auto& prof = pl->profile;
    Rational height = r + s;
    if (!(2 * r < prof.back().r)) return false;
    if (!(height < prof.front().s)) return false;
    if (!(height < profile_height(*pl, r))) return false;
    for (const Point& v : prof) {
      if (v.r.sign() <= 0 || !(v.r < 2 * r)) continue;
      Rational top = v.r <= r ? height : height * (2 * r - v.r) / r;
      if (!(top < v.s)) return false;
    }
    return true;
  }
  for (const Point& v : {Point{2 * r, 0}, Point{r, r + s}, Point{0, r + s}}) {
    if (!moment_contains(X, v, kOpenImage)) return false;
  }
  return true;
}

Region q_interior_region(const ToricDomain& X) {
  if (X.as_toric_pl()) throw DomainError("q-containment region is only exact for convex images");
  Region open = moment_region(X, kOpenImage);
  return open.pullback(kQVertexWide).intersect(open.pullback(kQVertexApex)).intersect(open.pullback(kQVertexTop));
}

Region q_diagonal_region(const ToricDomain& X) {
  const ToricPL* pl = X.as_toric_pl();
  if (!pl) {
    Region open = moment_region(X, kOpenImage);
    return open.pullback(kQDiagWide).intersect(open.pullback(kQDiagApex)).intersect(open.pullback(kQDiagTop));
  }
  const auto& prof = pl->profile;
  Region out = Region::of({form_lt(2, 0, prof.back().r)});
  std::vector<Cell> under;
  for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
    Rational m = piece_slope(*pl, i);
    under.push_back({form_ge(1, 0, prof[i].r), form_lt(1, 0, prof[i + 1].r),
                     form_lt(2 - m, 0, prof[i].s - m * prof[i].r)});
  }
  out = out.intersect(Region(std::move(under)));
  for (std::size_t i = 1; i + 1 < prof.size(); ++i) {
    const Point& v = prof[i];
    out = out.intersect(Region({{form_ge(1, 0, v.r)}, {form_le(2, 0, v.r)}, {form_lt(4, 0, v.s + 2 * v.r)}}));
  }
  return out;
}

bool triangle_in_closed_image(const ToricDomain& X, const Rational& e_r, const Rational& e_s) {
  require_positive(e_r, "triangle parameter");
  require_positive(e_s, "triangle parameter");
  if (const ToricPL* pl = X.as_toric_pl()) {
    const auto& prof = pl->profile;
    if (prof.back().r < e_r || prof.front().s < e_s) return false;
    for (const Point& v : prof) {
      if (v.r.sign() <= 0 || !(v.r < e_r)) continue;
      if (v.s < e_s * (1 - v.r / e_r)) return false;
    }
    return true;
  }
  MomentQuery closed{true, false, false};
  for (const Point& v : {Point{e_r, 0}, Point{0, e_s}}) {
    if (!moment_contains(X, v, closed)) return false;
  }
  return true;
}

}  // namespace shapelift
