#pragma once

#include <string>

#include "json.hpp"
#include "shapelift/echlattice.hpp"
#include "shapelift/obstruct.hpp"
#include "shapelift/pathlift.hpp"

namespace shapelift::io {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "shapelift 0.3.0";

/// Input problem with a location, e.g. "/profile/2/0: expected a rational".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses text, reporting line and column on failure.
Json parse_text(const std::string& text, const std::string& origin);
Json read_file(const std::string& path);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);
/// "r,s" as typed on the command line.
Point point_from_text(const std::string& text);

Json to_json(const Point& p);
Point point_from_json(const Json& j, const std::string& where);

Json to_json(const ToricDomain& X);
ToricDomain domain_from_json(const Json& j);

Json to_json(const PolyPath& path);
/// Accepts a bare list of points or {"path": [...]}.
PolyPath path_from_json(const Json& j);

Json to_json(const LiftCertificate& c);
LiftCertificate certificate_from_json(const Json& j);
Json to_json(const ObstructionWitness& w);
Json to_json(const LiftVerdict& v);
LiftVerdict verdict_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json to_json(const Conclusion& c);

Json to_json(const EmbeddingReport& r);
Json to_json(const CapSequence& s);

/// Adds "version" and "provenance" next to the payload keys.
Json report(Json payload, Json provenance);

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace shapelift::io
