#pragma once

#include <string>
#include <vector>

#include "shapelift/geometry.hpp"
#include "shapelift/intervals.hpp"

namespace shapelift {

/// alpha*r + beta*s + gamma > 0 (strict) or >= 0.
struct HalfPlane {
  Rational alpha;
  Rational beta;
  Rational gamma;
  bool strict = false;

  Rational eval(const Point& p) const { return alpha * p.r + beta * p.s + gamma; }
  bool holds(const Point& p) const;
  HalfPlane negated() const;
};

/// Builders reading like the inequality they encode.
HalfPlane form_lt(Rational alpha, Rational beta, Rational bound);  // alpha r + beta s < bound
HalfPlane form_le(Rational alpha, Rational beta, Rational bound);
HalfPlane form_gt(Rational alpha, Rational beta, Rational bound);
HalfPlane form_ge(Rational alpha, Rational beta, Rational bound);

/// v = M p + c, used to pull constraints on a q-polygon vertex back to (r, s).
struct AffineMap2 {
  Rational m00, m01, m10, m11;
  Rational c0, c1;

  Point apply(const Point& p) const { return {m00 * p.r + m01 * p.s + c0, m10 * p.r + m11 * p.s + c1}; }
};

HalfPlane pullback(const HalfPlane& h, const AffineMap2& m);

using Cell = std::vector<HalfPlane>;

/// Finite union of convex cells, each an intersection of half-planes.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  static Region everything() { return Region({Cell{}}); }
  static Region nothing() { return Region(); }
  static Region of(Cell c) { return Region({std::move(c)}); }

  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(const Point& p) const;

  Region unite(const Region& o) const;
  Region intersect(const Region& o) const;
  Region intersect(const HalfPlane& h) const;
  Region pullback(const AffineMap2& m) const;

 private:
  std::vector<Cell> cells_;
};

/// Parameters tau in [0, 1] where f(tau) = f0 + tau (f1 - f0) is > 0 (strict) or >= 0.
IntervalSet affine_sign_set(const Rational& f0, const Rational& f1, bool strict);

/// Exact set of t in [0, T] with path(t) in the region.
IntervalSet param_set(const PolyPath& path, const Region& region);

/// Sutherland-Hodgman clip of a convex polygon by a closed half-plane.
std::vector<Point> clip_polygon(const std::vector<Point>& poly, const HalfPlane& h);

}  // namespace shapelift
