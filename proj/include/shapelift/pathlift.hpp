#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shapelift/domain.hpp"
#include "shapelift/shape.hpp"

namespace shapelift {

enum class PieceKind { TypeI, TypeII };

const char* to_string(PieceKind k);

/// One sub-path [t0, t1] of a certificate. Type-II pieces carry the time
/// t_star at which the rolled-up construction takes over.
struct CertificatePiece {
  PieceKind kind = PieceKind::TypeI;
  Rational t0;
  Rational t1;
  std::optional<Rational> t_star;
};

/// Which clauses the Type-II pieces satisfy: the family-specific ones
/// (Theorem) or the q-polygon containment ones (General). Inside means the
/// whole path stays in the reduced image.
enum class Criterion { Inside, Theorem, General };

const char* to_string(Criterion c);

struct LiftCertificate {
  Criterion criterion = Criterion::Inside;
  std::vector<CertificatePiece> pieces;
};

struct ObstructionWitness {
  Family family = Family::Ball;
  std::vector<Trend> ratio_trends;
  AffineForm form;
  Rational form_min;
  /// The obstruction is proven for the prefix [0, prefix_end].
  Rational prefix_end;
};

struct LiftVerdict {
  enum class Kind { Lifts, Obstructed, Undetermined };
  Kind kind = Kind::Undetermined;
  std::optional<LiftCertificate> certificate;
  std::optional<ObstructionWitness> witness;
};

const char* to_string(LiftVerdict::Kind k);

/// Parameters where the path is in the open, reduced, positive image.
IntervalSet inside_set(const ToricDomain& X, const PolyPath& path);

/// Name of the first failed hypothesis of obstruction_I, or nullopt.
std::optional<std::string> obstruction_precondition_failure(const ShapeRegion& X, const PolyPath& path);

std::optional<ObstructionWitness> obstruction_I(const ShapeRegion& X, const PolyPath& path);

/// Region in (r, s) where the family's condition at t_star holds.
Region sufficiency_clause_region(const ShapeRegion& X);

std::optional<LiftCertificate> sufficiency_II(const ShapeRegion& X, const PolyPath& path);

/// Breakpoints, when given, are strictly increasing interior parameters.
std::optional<LiftCertificate> general_criterion(const ToricDomain& X, const PolyPath& path,
                                                 const std::optional<std::vector<Rational>>& breakpoints = std::nullopt);

LiftVerdict classify(const ToricDomain& X, const PolyPath& path);

/// Re-checks every clause a certificate claims. Empty string means valid,
/// otherwise the reason it fails.
std::string certificate_failure(const ToricDomain& X, const PolyPath& path, const LiftCertificate& cert);

inline bool verify_certificate(const ToricDomain& X, const PolyPath& path, const LiftCertificate& cert) {
  return certificate_failure(X, path, cert).empty();
}

bool supports_shape(const ToricDomain& X);

}  // namespace shapelift
