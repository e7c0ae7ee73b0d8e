#include "shapelift/geometry.hpp"

#include <ostream>

#include "shapelift/errors.hpp"

namespace shapelift {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.r << ", " << p.s << ")";
}

Point operator+(const Point& a, const Point& b) { return {a.r + b.r, a.s + b.s}; }
Point operator-(const Point& a, const Point& b) { return {a.r - b.r, a.s - b.s}; }
Point operator*(const Rational& k, const Point& p) { return {k * p.r, k * p.s}; }
Rational cross(const Point& a, const Point& b) { return a.r * b.s - a.s * b.r; }

Segment::Segment(Point p0, Point p1) : p0_(std::move(p0)), p1_(std::move(p1)) {
  if (p0_ == p1_) throw DomainError("degenerate segment: endpoints coincide");
}

Point Segment::at(const Rational& tau) const { return p0_ + tau * (p1_ - p0_); }

PolyPath::PolyPath(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DomainError("path needs at least two vertices");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i + 1]) {
      throw DomainError("path has repeated consecutive vertex at index " + std::to_string(i + 1));
    }
  }
}

Point PolyPath::at(const Rational& t) const {
  if (t.sign() < 0 || t > end_param()) throw DomainError("path parameter out of range: " + t.str());
  BigInt i = t.floor();
  std::size_t idx = i.get_ui();
  if (idx == segment_count()) return vertices_.back();
  return segment(idx).at(t - Rational(i));
}

PolyPath PolyPath::sub_path(const Rational& t0, const Rational& t1) const {
  if (!(t0 < t1)) throw DomainError("sub_path needs t0 < t1");
  std::vector<Point> out{at(t0)};
  BigInt k = t0.floor() + 1;
  while (Rational(k) < t1) {
    out.push_back(vertices_[k.get_ui()]);
    k += 1;
  }
  Point last = at(t1);
  if (!(last == out.back())) out.push_back(last);
  return PolyPath(std::move(out));
}

PolyPath PolyPath::reversed() const {
  return PolyPath(std::vector<Point>(vertices_.rbegin(), vertices_.rend()));
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw DomainError("convex polygon needs at least three vertices");
  bool any_turn = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const Point& c = vertices_[(i + 2) % n];
    if (a == b) throw DomainError("convex polygon has repeated vertex");
    int turn = cross(b - a, c - b).sign();
    if (turn < 0) throw DomainError("polygon is not convex and counterclockwise");
    if (turn > 0) any_turn = true;
  }
  if (!any_turn) throw DomainError("polygon vertices are all collinear");
}

Rational ConvexPolygon::doubled_area() const {
  Rational twice;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    twice += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return twice;
}

const char* to_string(Trend t) {
  switch (t) {
    case Trend::NonIncreasing: return "non_increasing";
    case Trend::Constant: return "constant";
    case Trend::NonDecreasing: return "non_decreasing";
  }
  return "?";
}

Trend segment_ratio_trend(const Segment& seg) {
  const Point& a = seg.p0();
  const Point& b = seg.p1();
  if (a.s.sign() <= 0 || b.s.sign() <= 0) {
    throw DomainError("ratio trend needs s > 0 at both endpoints");
  }
  Rational numerator = (b.r - a.r) * a.s - a.r * (b.s - a.s);
  switch (numerator.sign()) {
    case -1: return Trend::NonIncreasing;
    case 0: return Trend::Constant;
    default: return Trend::NonDecreasing;
  }
}

Extrema linear_extrema_on_path(const Rational& alpha, const Rational& beta, const PolyPath& path) {
  Extrema out;
  bool first = true;
  for (const Point& v : path.vertices()) {
    Rational value = alpha * v.r + beta * v.s;
    if (first) {
      out.min = value;
      out.max = value;
      first = false;
    } else {
      out.min = min(out.min, value);
      out.max = max(out.max, value);
    }
  }
  return out;
}

bool polygon_contains(const ConvexPolygon& outer, const Point& p, bool strict) {
  const auto& v = outer.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    int side = cross(b - a, p - a).sign();
    if (side < 0 || (strict && side == 0)) return false;
  }
  return true;
}

bool polygon_contains(const ConvexPolygon& outer, const Containee& inner, bool strict) {
  return std::visit(
      [&](const auto& shape) -> bool {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Point>) {
          return polygon_contains(outer, shape, strict);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return polygon_contains(outer, shape.p0(), strict) &&
                 polygon_contains(outer, shape.p1(), strict);
        } else {
          for (const Point& p : shape.vertices()) {
            if (!polygon_contains(outer, p, strict)) return false;
          }
          return true;
        }
      },
      inner);
}

Rational shoelace_area(std::span<const Point> vertices) {
  Rational twice;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return abs(twice) / Rational(2);
}

}  // namespace shapelift
