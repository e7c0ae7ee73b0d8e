#pragma once

#include <random>
#include <string>
#include <vector>

#include "shapelift/geometry.hpp"

namespace testing_support {

using shapelift::Point;
using shapelift::PolyPath;
using shapelift::Rational;

inline Rational Q(const std::string& text) { return Rational::parse(text); }
inline Point P(const std::string& r, const std::string& s) { return {Q(r), Q(s)}; }

inline PolyPath path_of(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Point> v;
  for (const auto& [r, s] : pts) v.push_back(P(r, s));
  return PolyPath(std::move(v));
}

/// Uniform rational p/q with q in [1, max_den] and |p/q| <= bound.
inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 12) {
  std::uniform_int_distribution<long> den(1, max_den);
  long q = den(rng);
  std::uniform_int_distribution<long> num(lo * q, hi * q);
  return Rational(shapelift::BigInt(num(rng)), shapelift::BigInt(q));
}

inline Point random_point(std::mt19937_64& rng, long lo, long hi, long max_den = 12) {
  return {random_rational(rng, lo, hi, max_den), random_rational(rng, lo, hi, max_den)};
}

}  // namespace testing_support
