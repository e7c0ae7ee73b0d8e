#include "shapelift/region.hpp"

#include <algorithm>

namespace shapelift {

bool HalfPlane::holds(const Point& p) const {
  int sg = eval(p).sign();
  return strict ? sg > 0 : sg >= 0;
}

HalfPlane HalfPlane::negated() const { return {-alpha, -beta, -gamma, !strict}; }

HalfPlane form_lt(Rational alpha, Rational beta, Rational bound) {
  return {-alpha, -beta, std::move(bound), true};
}
HalfPlane form_le(Rational alpha, Rational beta, Rational bound) {
  return {-alpha, -beta, std::move(bound), false};
}
HalfPlane form_gt(Rational alpha, Rational beta, Rational bound) {
  return {std::move(alpha), std::move(beta), -bound, true};
}
HalfPlane form_ge(Rational alpha, Rational beta, Rational bound) {
  return {std::move(alpha), std::move(beta), -bound, false};
}

HalfPlane pullback(const HalfPlane& h, const AffineMap2& m) {
  return {h.alpha * m.m00 + h.beta * m.m10, h.alpha * m.m01 + h.beta * m.m11,
          h.alpha * m.c0 + h.beta * m.c1 + h.gamma, h.strict};
}

bool Region::contains(const Point& p) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) {
    return std::all_of(c.begin(), c.end(), [&](const HalfPlane& h) { return h.holds(p); });
  });
}

Region Region::unite(const Region& o) const {
  std::vector<Cell> out = cells_;
  out.insert(out.end(), o.cells_.begin(), o.cells_.end());
  return Region(std::move(out));
}

Region Region::intersect(const Region& o) const {
  std::vector<Cell> out;
  for (const Cell& a : cells_) {
    for (const Cell& b : o.cells_) {
      Cell c = a;
      c.insert(c.end(), b.begin(), b.end());
      out.push_back(std::move(c));
    }
  }
  return Region(std::move(out));
}

Region Region::intersect(const HalfPlane& h) const {
  std::vector<Cell> out = cells_;
  for (Cell& c : out) c.push_back(h);
  return Region(std::move(out));
}

Region Region::pullback(const AffineMap2& m) const {
  std::vector<Cell> out;
  for (const Cell& c : cells_) {
    Cell pc;
    for (const HalfPlane& h : c) pc.push_back(shapelift::pullback(h, m));
    out.push_back(std::move(pc));
  }
  return Region(std::move(out));
}

IntervalSet affine_sign_set(const Rational& f0, const Rational& f1, bool strict) {
  auto ok = [&](const Rational& v) { return strict ? v.sign() > 0 : v.sign() >= 0; };
  if (f0 == f1) return ok(f0) ? IntervalSet(Interval::closed(0, 1)) : IntervalSet();
  Rational root = f0 / (f0 - f1);
  if (f0 < f1) return IntervalSet(Interval{root, 1, !strict, true}).intersect(Interval::closed(0, 1));
  return IntervalSet(Interval{0, root, true, !strict}).intersect(Interval::closed(0, 1));
}

IntervalSet param_set(const PolyPath& path, const Region& region) {
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    const Point& a = path.vertices()[i];
    const Point& b = path.vertices()[i + 1];
    IntervalSet seg_set;
    for (const Cell& cell : region.cells()) {
      IntervalSet cell_set(Interval::closed(0, 1));
      for (const HalfPlane& h : cell) {
        cell_set = cell_set.intersect(affine_sign_set(h.eval(a), h.eval(b), h.strict));
        if (cell_set.empty()) break;
      }
      seg_set = seg_set.unite(cell_set);
    }
    IntervalSet shifted = seg_set.shifted(Rational(static_cast<long>(i)));
    pieces.insert(pieces.end(), shifted.components().begin(), shifted.components().end());
  }
  return IntervalSet(std::move(pieces));
}

std::vector<Point> clip_polygon(const std::vector<Point>& poly, const HalfPlane& h) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    Rational fc = h.eval(cur);
    Rational fn = h.eval(nxt);
    if (fc.sign() >= 0) out.push_back(cur);
    if ((fc.sign() > 0 && fn.sign() < 0) || (fc.sign() < 0 && fn.sign() > 0)) {
      Rational tau = fc / (fc - fn);
      out.push_back(cur + tau * (nxt - cur));
    }
  }
  std::vector<Point> dedup;
  for (const Point& p : out) {
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  }
  if (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

}  // namespace shapelift
