#pragma once

#include "shapelift/domain.hpp"

namespace shapelift {

/// A ball, an ellipsoid E(a, ka) with integral k >= 2, or a polydisk.
class ShapeRegion {
 public:
  explicit ShapeRegion(ToricDomain X);

  const ToricDomain& domain() const { return X_; }
  Family family() const { return X_.family(); }
  /// b/a for ellipsoids, 1 for balls, d/c for polydisks.
  const Rational& k() const { return k_; }

 private:
  ToricDomain X_;
  Rational k_;
};

/// alpha*r + beta*s compared against `bound`; used for the knotting line.
struct AffineForm {
  Rational alpha;
  Rational beta;
  Rational bound;

  Rational eval(const Point& p) const { return alpha * p.r + beta * p.s; }
};

/// Ball 2r+s vs R, ellipsoid (k+1)r+s vs b, polydisk r+s vs d.
AffineForm knot_form(const ShapeRegion& X);

/// Width of the vertical flexible strip: R/3, a/2, c/2.
Rational strip_bound(const ShapeRegion& X);

/// Sh^+ as an exact region, restricted to 0 < r <= s.
Region shape_region_reduced(const ShapeRegion& X);

bool shape_member(const ShapeRegion& X, Point p);
bool knotted_member(const ShapeRegion& X, const Point& p);
bool emb_knotted_member(const ShapeRegion& target, const Rational& x, const Point& p);

/// Smallest capacity an unknotted image of E(1, x) can have. For ellipsoids
/// and polydisks `k` is the aspect ratio of the target.
Rational unknotted_threshold(Family family, const Rational& x, const Rational& k = 1);

}  // namespace shapelift
