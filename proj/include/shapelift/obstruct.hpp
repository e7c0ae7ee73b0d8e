#pragma once

#include <optional>
#include <string>

#include "shapelift/domain.hpp"

namespace shapelift {

/// Does X embed into the target ellipsoid E(a, b) with b = k a, k integral?
class ObstructionInstance {
 public:
  ObstructionInstance(ToricDomain source, ToricDomain target);

  const ToricDomain& source() const { return source_; }
  const ToricDomain& target() const { return target_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& k() const { return k_; }
  /// a k / (k + 1): the excluded ellipsoid E(a k / (k + 1), b) is (k+1) r + s < b.
  Rational excluded_a() const;
  /// Closure of mu(X) lies in the closed target triangle.
  bool source_inside_target() const;

 private:
  ToricDomain source_;
  ToricDomain target_;
  Rational a_;
  Rational b_;
  BigInt k_;
};

/// An inner ellipsoid E(e_r, e_s) and an oriented path leaving the target.
struct Witness {
  Rational e_r;
  Rational e_s;
  PolyPath path;
};

/// Empty when the witness satisfies every clause, otherwise the first failure.
std::string witness_failure(const ObstructionInstance& inst, const Witness& w);

inline bool verify_witness(const ObstructionInstance& inst, const Witness& w) {
  return witness_failure(inst, w).empty();
}

/// Grid search with step 1/N over inner ellipsoids and grid paths. Every
/// returned witness has passed verify_witness.
std::optional<Witness> search_witness(const ObstructionInstance& inst, long N);

struct Conclusion {
  enum class Kind { Obstructed, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<Witness> witness;
  std::string reason;
};

const char* to_string(Conclusion::Kind k);

Conclusion conclude(const ObstructionInstance& inst, const std::optional<Witness>& w,
                    std::optional<long> search_grid = 4);

}  // namespace shapelift
