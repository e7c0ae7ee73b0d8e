#include "shapelift/json_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "shapelift/errors.hpp"

namespace shapelift::io {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::vector<Point> points_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

template <typename Enum, std::size_t N>
Enum enum_from_json(const Json& j, const std::string& where, const std::array<Enum, N>& values) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  for (Enum e : values) {
    if (j.get<std::string>() == to_string(e)) return e;
  }
  throw InputError(where + ": unknown value \"" + j.get<std::string>() + "\"");
}

}  // namespace

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(where + ": expected a rational string like \"7/2\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const DomainError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Point point_from_text(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("point '" + text + "': expected r,s");
  try {
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  } catch (const DomainError& e) {
    throw InputError("point '" + text + "': " + e.what());
  }
}

Json to_json(const Point& p) { return Json::array({p.r.str(), p.s.str()}); }

Point point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected a pair [r, s]");
  return {rational_from_json(j[0], where + "/0"), rational_from_json(j[1], where + "/1")};
}

Json to_json(const ToricDomain& X) {
  Json j;
  if (const Ball* b = X.as_ball()) {
    j["type"] = "ball";
    j["R"] = to_json(b->R);
  } else if (const Ellipsoid* e = X.as_ellipsoid()) {
    j["type"] = "ellipsoid";
    j["a"] = to_json(e->a);
    j["b"] = to_json(e->b);
  } else if (const Polydisk* p = X.as_polydisk()) {
    j["type"] = "polydisk";
    j["c"] = to_json(p->c);
    j["d"] = to_json(p->d);
  } else {
    j["type"] = "toric_pl";
    j["profile"] = Json::array();
    for (const Point& v : X.as_toric_pl()->profile) j["profile"].push_back(to_json(v));
  }
  return j;
}

ToricDomain domain_from_json(const Json& j) {
  const Json& type = field(j, "type", "domain");
  if (!type.is_string()) throw InputError("/type: expected a string");
  std::string t = type.get<std::string>();
  try {
    if (t == "ball") return ToricDomain::ball(rational_from_json(field(j, "R", "domain"), "/R"));
    if (t == "ellipsoid") {
      return ToricDomain::ellipsoid(rational_from_json(field(j, "a", "domain"), "/a"),
                                    rational_from_json(field(j, "b", "domain"), "/b"));
    }
    if (t == "polydisk") {
      return ToricDomain::polydisk(rational_from_json(field(j, "c", "domain"), "/c"),
                                   rational_from_json(field(j, "d", "domain"), "/d"));
    }
    if (t == "toric_pl") return ToricDomain::toric_pl(points_from_json(field(j, "profile", "domain"), "/profile"));
  } catch (const DomainError& e) {
    throw InputError(std::string("domain: ") + e.what());
  }
  throw InputError("/type: unknown domain type \"" + t + "\"");
}

Json to_json(const PolyPath& path) {
  Json j = Json::array();
  for (const Point& p : path.vertices()) j.push_back(to_json(p));
  return j;
}

PolyPath path_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "path", "path") : j;
  std::string where = j.is_object() ? "/path" : "";
  try {
    return PolyPath(points_from_json(list, where));
  } catch (const DomainError& e) {
    throw InputError(std::string("path: ") + e.what());
  }
}

Json to_json(const LiftCertificate& c) {
  Json j;
  j["criterion"] = to_string(c.criterion);
  j["pieces"] = Json::array();
  for (const CertificatePiece& p : c.pieces) {
    Json piece{{"kind", to_string(p.kind)}, {"t0", to_json(p.t0)}, {"t1", to_json(p.t1)}};
    if (p.t_star) piece["t_star"] = to_json(*p.t_star);
    j["pieces"].push_back(piece);
  }
  return j;
}

LiftCertificate certificate_from_json(const Json& j) {
  LiftCertificate c;
  c.criterion = enum_from_json(field(j, "criterion", "certificate"), "/criterion",
                               std::array{Criterion::Inside, Criterion::Theorem, Criterion::General});
  const Json& pieces = field(j, "pieces", "certificate");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string where = "/pieces/" + std::to_string(i);
    CertificatePiece p;
    p.kind = enum_from_json(field(pieces[i], "kind", where), where + "/kind",
                            std::array{PieceKind::TypeI, PieceKind::TypeII});
    p.t0 = rational_from_json(field(pieces[i], "t0", where), where + "/t0");
    p.t1 = rational_from_json(field(pieces[i], "t1", where), where + "/t1");
    if (pieces[i].contains("t_star")) p.t_star = rational_from_json(pieces[i]["t_star"], where + "/t_star");
    c.pieces.push_back(p);
  }
  return c;
}

Json to_json(const ObstructionWitness& w) {
  Json j;
  j["family"] = to_string(w.family);
  j["ratio_trends"] = Json::array();
  for (Trend t : w.ratio_trends) j["ratio_trends"].push_back(to_string(t));
  j["form"] = {{"alpha", to_json(w.form.alpha)}, {"beta", to_json(w.form.beta)}, {"bound", to_json(w.form.bound)}};
  j["form_min"] = to_json(w.form_min);
  j["prefix_end"] = to_json(w.prefix_end);
  return j;
}

namespace {

ObstructionWitness obstruction_witness_from_json(const Json& j) {
  ObstructionWitness w;
  w.family = enum_from_json(field(j, "family", "witness"), "/witness/family",
                            std::array{Family::Ball, Family::Ellipsoid, Family::Polydisk, Family::ToricPL});
  for (const Json& t : field(j, "ratio_trends", "witness")) {
    w.ratio_trends.push_back(enum_from_json(
        t, "/witness/ratio_trends", std::array{Trend::NonIncreasing, Trend::Constant, Trend::NonDecreasing}));
  }
  const Json& form = field(j, "form", "witness");
  w.form.alpha = rational_from_json(field(form, "alpha", "form"), "/witness/form/alpha");
  w.form.beta = rational_from_json(field(form, "beta", "form"), "/witness/form/beta");
  w.form.bound = rational_from_json(field(form, "bound", "form"), "/witness/form/bound");
  w.form_min = rational_from_json(field(j, "form_min", "witness"), "/witness/form_min");
  w.prefix_end = rational_from_json(field(j, "prefix_end", "witness"), "/witness/prefix_end");
  return w;
}

}  // namespace

Json to_json(const LiftVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

LiftVerdict verdict_from_json(const Json& j) {
  LiftVerdict v;
  v.kind = enum_from_json(field(j, "verdict", "verdict"), "/verdict",
                          std::array{LiftVerdict::Kind::Lifts, LiftVerdict::Kind::Obstructed,
                                     LiftVerdict::Kind::Undetermined});
  if (j.contains("certificate")) v.certificate = certificate_from_json(j["certificate"]);
  if (j.contains("witness")) v.witness = obstruction_witness_from_json(j["witness"]);
  return v;
}

Json to_json(const Witness& w) { return {{"e_r", to_json(w.e_r)}, {"e_s", to_json(w.e_s)}, {"path", to_json(w.path)}}; }

Witness witness_from_json(const Json& j) {
  Rational e_r = rational_from_json(field(j, "e_r", "witness"), "/e_r");
  Rational e_s = rational_from_json(field(j, "e_s", "witness"), "/e_s");
  return Witness{e_r, e_s, path_from_json(field(j, "path", "witness"))};
}

Json to_json(const Conclusion& c) {
  Json j;
  j["verdict"] = to_string(c.kind);
  j["reason"] = c.reason;
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

Json to_json(const EmbeddingReport& r) {
  Json j;
  j["verdict"] = to_string(r.kind);
  j["horizon"] = r.horizon;
  j["source_volume"] = to_json(r.source_volume);
  j["target_volume"] = to_json(r.target_volume);
  if (r.kind == EmbeddingReport::Kind::ObstructedAt) {
    j["index"] = r.index;
    j["source_value"] = to_json(r.source_value);
    j["target_value"] = to_json(r.target_value);
  }
  if (r.kind == EmbeddingReport::Kind::NoObstructionUpTo) {
    j["note"] = "finite horizon: no capacity obstruction found, existence is not certified";
  }
  return j;
}

Json to_json(const CapSequence& s) {
  Json j;
  j["a"] = to_json(s.a);
  j["b"] = to_json(s.b);
  j["origin"] = 0;
  j["entries"] = Json::array();
  for (const Rational& q : s.entries) j["entries"].push_back(to_json(q));
  return j;
}

Json report(Json payload, Json provenance) {
  payload["version"] = kToolVersion;
  payload["provenance"] = std::move(provenance);
  return payload;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace shapelift::io
