#include "shapelift/intervals.hpp"

#include <algorithm>

namespace shapelift {

bool Interval::contains(const Rational& t) const {
  if (t < lo || (t == lo && !lo_closed)) return false;
  if (hi < t || (t == hi && !hi_closed)) return false;
  return true;
}

Rational Interval::leftish_point() const {
  if (lo_closed) return lo;
  if (lo == hi) return hi;
  return midpoint(lo, hi);
}

Rational Interval::rightish_point() const {
  if (hi_closed) return hi;
  if (lo == hi) return lo;
  return midpoint(lo, hi);
}

std::string Interval::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo == b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  } else {
    const Interval& m = a.lo < b.lo ? b : a;
    out.lo = m.lo;
    out.lo_closed = m.lo_closed;
  }
  if (a.hi == b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  } else {
    const Interval& m = a.hi < b.hi ? a : b;
    out.hi = m.hi;
    out.hi_closed = m.hi_closed;
  }
  if (out.is_empty()) return std::nullopt;
  return out;
}

IntervalSet::IntervalSet(const Interval& iv) {
  if (!iv.is_empty()) parts_.push_back(iv);
}

IntervalSet::IntervalSet(std::vector<Interval> pieces) : parts_(std::move(pieces)) { normalize(); }

void IntervalSet::normalize() {
  std::erase_if(parts_, [](const Interval& iv) { return iv.is_empty(); });
  std::sort(parts_.begin(), parts_.end(), [](const Interval& x, const Interval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return x.lo_closed && !y.lo_closed;
  });
  std::vector<Interval> merged;
  for (const Interval& iv : parts_) {
    if (!merged.empty()) {
      Interval& last = merged.back();
      bool touches = iv.lo < last.hi || (iv.lo == last.hi && (last.hi_closed || iv.lo_closed));
      if (touches) {
        if (last.hi < iv.hi) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        } else if (last.hi == iv.hi) {
          last.hi_closed = last.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(iv);
  }
  parts_ = std::move(merged);
}

bool IntervalSet::contains(const Rational& t) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& iv) { return iv.contains(t); });
}

bool IntervalSet::covers(const Interval& iv) const {
  if (iv.is_empty()) return true;
  for (const Interval& p : parts_) {
    auto common = shapelift::intersect(p, iv);
    if (common && *common == iv) return true;
  }
  return false;
}

std::optional<Interval> IntervalSet::component_containing(const Rational& t) const {
  for (const Interval& p : parts_) {
    if (p.contains(t)) return p;
  }
  return std::nullopt;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const Interval& a : parts_) {
    for (const Interval& b : o.parts_) {
      if (auto c = shapelift::intersect(a, b)) out.push_back(*c);
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement_in(const Interval& domain) const {
  std::vector<Interval> out;
  Rational cursor = domain.lo;
  bool cursor_closed = domain.lo_closed;
  for (const Interval& p : intersect(domain).parts_) {
    out.push_back(Interval{cursor, p.lo, cursor_closed, !p.lo_closed});
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  out.push_back(Interval{cursor, domain.hi, cursor_closed, domain.hi_closed});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::shifted(const Rational& by) const {
  IntervalSet out = *this;
  for (Interval& p : out.parts_) {
    p.lo += by;
    p.hi += by;
  }
  return out;
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (const Interval& p : parts_) {
    if (!out.empty()) out += " u ";
    out += p.str();
  }
  return out;
}

}  // namespace shapelift
