#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shapelift/geometry.hpp"
#include "shapelift/region.hpp"

namespace shapelift {

struct Ball {
  Rational R;
};

struct Ellipsoid {
  Rational a;
  Rational b;
};

struct Polydisk {
  Rational c;
  Rational d;
};

/// Region under the graph of the piecewise-linear profile through
/// (0, s_0), (r_1, s_1), ..., (r_n, 0).
struct ToricPL {
  std::vector<Point> profile;
};

enum class Family { Ball, Ellipsoid, Polydisk, ToricPL };

const char* to_string(Family f);

class ToricDomain {
 public:
  using Variant = std::variant<Ball, Ellipsoid, Polydisk, ToricPL>;

  static ToricDomain ball(Rational R);
  static ToricDomain ellipsoid(Rational a, Rational b);
  static ToricDomain polydisk(Rational c, Rational d);
  static ToricDomain toric_pl(std::vector<Point> profile);

  const Variant& variant() const { return v_; }
  Family family() const;

  const Ball* as_ball() const { return std::get_if<Ball>(&v_); }
  const Ellipsoid* as_ellipsoid() const { return std::get_if<Ellipsoid>(&v_); }
  const Polydisk* as_polydisk() const { return std::get_if<Polydisk>(&v_); }
  const ToricPL* as_toric_pl() const { return std::get_if<ToricPL>(&v_); }

  /// b/a for an ellipsoid with integral ratio, 1 for a ball.
  std::optional<BigInt> integral_ratio() const;
  /// Image is the triangle Delta(a, b): balls and ellipsoids.
  std::optional<std::pair<Rational, Rational>> triangle() const;

  ToricDomain scaled(const Rational& lambda) const;
  std::string describe() const;

 private:
  explicit ToricDomain(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

struct MomentQuery {
  bool closure = false;
  bool reduced = false;
  bool positive = false;
};

inline constexpr MomentQuery kOpenImage{false, false, false};
inline constexpr MomentQuery kOpenReducedPositive{false, true, true};

/// Exact description of the moment image under the query flags.
Region moment_region(const ToricDomain& X, MomentQuery q);
bool moment_contains(const ToricDomain& X, const Point& p, MomentQuery q);

/// Vertices (0,0), (2a,0), (a,a+b), (0,a+b).
ConvexPolygon q_polygon(const Rational& a, const Rational& b);

Rational volume(const ToricDomain& X);

/// Counterclockwise outline of the closed moment image.
std::vector<Point> image_outline(const ToricDomain& X);

/// Height of the profile over r in [0, r_n].
Rational profile_height(const ToricPL& pl, const Rational& r);

/// q(r, s) inside the image, interior taken relative to the quadrant:
/// edges on the axes may touch the axes, everything else stays strictly
/// below the outer boundary.
bool q_in_interior(const ToricDomain& X, const Rational& r, const Rational& s);

/// Exact (r, s)-region where q(r, s) sits inside; only for convex images.
Region q_interior_region(const ToricDomain& X);

/// Exact (r, s)-region where q(r, r) sits inside; every family.
Region q_diagonal_region(const ToricDomain& X);

/// Delta(e_r, e_s) contained in the closed image.
bool triangle_in_closed_image(const ToricDomain& X, const Rational& e_r, const Rational& e_s);

}  // namespace shapelift
