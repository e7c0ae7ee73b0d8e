#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shapelift/rational.hpp"

namespace shapelift {

/// A nonempty rational interval with independent endpoint closedness.
/// A single point is the closed interval [t, t].
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval point(const Rational& t) { return {t, t, true, true}; }

  bool is_empty() const { return hi < lo || (lo == hi && !(lo_closed && hi_closed)); }
  bool contains(const Rational& t) const;
  /// A rational point inside: lo if closed, else the midpoint (hi if degenerate).
  Rational leftish_point() const;
  Rational rightish_point() const;
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of pairwise disjoint, non-touching intervals kept sorted.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(const Interval& iv);
  explicit IntervalSet(std::vector<Interval> pieces);

  const std::vector<Interval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(const Rational& t) const;
  bool covers(const Interval& iv) const;
  std::optional<Interval> component_containing(const Rational& t) const;

  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet intersect(const Interval& iv) const { return intersect(IntervalSet(iv)); }
  /// domain minus *this.
  IntervalSet complement_in(const Interval& domain) const;
  IntervalSet shifted(const Rational& by) const;

  std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  void normalize();
  std::vector<Interval> parts_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

}  // namespace shapelift
