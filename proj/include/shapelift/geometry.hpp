#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "shapelift/rational.hpp"

namespace shapelift {

/// A point (r, s) of the moment plane. r and s are the symplectic areas of
/// the two factors of the product torus sitting over the point.
struct Point {
  Rational r;
  Rational s;

  friend bool operator==(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& k, const Point& p);
/// z-component of the 2D cross product.
Rational cross(const Point& a, const Point& b);

/// Closed segment p0 -> p1 with p0 != p1.
class Segment {
 public:
  Segment(Point p0, Point p1);

  const Point& p0() const { return p0_; }
  const Point& p1() const { return p1_; }
  /// Affine parameterization, tau in [0, 1].
  Point at(const Rational& tau) const;

 private:
  Point p0_;
  Point p1_;
};

/// Oriented piecewise-linear path. Segment i is traversed for parameter
/// t in [i, i+1], so the whole path lives on [0, segment_count()].
class PolyPath {
 public:
  explicit PolyPath(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  Segment segment(std::size_t i) const { return Segment(vertices_[i], vertices_[i + 1]); }
  Rational end_param() const { return Rational(static_cast<long>(segment_count())); }
  const Point& front() const { return vertices_.front(); }
  const Point& back() const { return vertices_.back(); }

  /// Point at global parameter t in [0, end_param()].
  Point at(const Rational& t) const;
  /// The sub-path over [t0, t1], t0 < t1, with breakpoints at integer params.
  PolyPath sub_path(const Rational& t0, const Rational& t1) const;
  PolyPath reversed() const;

 private:
  std::vector<Point> vertices_;
};

/// Counterclockwise convex polygon. Collinear consecutive vertices are
/// allowed, fully collinear or clockwise input is rejected.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Twice the signed (positive) area.
  Rational doubled_area() const;

 private:
  std::vector<Point> vertices_;
};

enum class Trend { NonIncreasing, Constant, NonDecreasing };

const char* to_string(Trend t);

/// Monotonicity of r/s along a segment with s > 0 at both endpoints. The
/// derivative of r/s has the constant-sign numerator dr*s0 - r0*ds, so one
/// sign evaluation decides the trend.
Trend segment_ratio_trend(const Segment& seg);

struct Extrema {
  Rational min;
  Rational max;
};

/// Exact min and max of alpha*r + beta*s over a path (attained at vertices).
Extrema linear_extrema_on_path(const Rational& alpha, const Rational& beta, const PolyPath& path);

using Containee = std::variant<Point, Segment, ConvexPolygon>;

/// Containment in a convex polygon; `strict` asks for the interior.
bool polygon_contains(const ConvexPolygon& outer, const Containee& inner, bool strict);
bool polygon_contains(const ConvexPolygon& outer, const Point& p, bool strict);

/// Shoelace area of an arbitrary simple polygon (any orientation), as |A|.
Rational shoelace_area(std::span<const Point> vertices);

}  // namespace shapelift
