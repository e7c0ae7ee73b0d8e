#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "shapelift/acceptance.hpp"
#include "shapelift/echlattice.hpp"
#include "shapelift/errors.hpp"
#include "shapelift/json_io.hpp"
#include "shapelift/obstruct.hpp"
#include "shapelift/pathlift.hpp"
#include "shapelift/sftindex.hpp"
#include "shapelift/svg.hpp"

using namespace shapelift;
using io::Json;

namespace {

constexpr int kDefinitive = 0;
constexpr int kInputError = 1;
constexpr int kUndetermined = 2;

struct Args {
  std::string domain, path, point, from, into, witness, source, target, svg, breakpoints, scene;
  std::string a, b, t, mode = "row_sum";
  std::size_t horizon = 2000, count = 20;
  std::optional<long> search;
  std::string emb_x;
  std::vector<std::string> pos, neg, neg_cz;
  std::string degree = "0,0";
  bool labels = false, json = false, timings = false;
  std::vector<int> only;
  std::string input;
};

// A file name, or the JSON itself when it starts with '{' or '['.
Json load(const std::string& arg, const char* flag) {
  if (arg.empty()) throw io::InputError(std::string(flag) + " is required");
  if (arg.front() == '{' || arg.front() == '[') return io::parse_text(arg, flag);
  return io::read_file(arg);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& e) {
    throw io::InputError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Rational> parse_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_rational(item, flag));
  return out;
}

EndPair parse_pair(const std::string& text, const char* flag) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw io::InputError(std::string(flag) + " '" + text + "': expected m,n");
  try {
    std::size_t used0 = 0, used1 = 0;
    long m = std::stol(parts[0], &used0), n = std::stol(parts[1], &used1);
    if (used0 != parts[0].size() || used1 != parts[1].size()) throw std::invalid_argument("trailing text");
    return {m, n};
  } catch (const std::exception&) {
    throw io::InputError(std::string(flag) + " '" + text + "': expected two integers");
  }
}

Json pairs_json(const std::vector<EndPair>& pairs) {
  Json j = Json::array();
  for (const auto& [m, n] : pairs) j.push_back(Json::array({m, n}));
  return j;
}

struct Outcome {
  int code;
  Json payload;
  std::string summary;
};

Outcome run_shape(const Args& a, bool knotted) {
  Json dj = load(a.domain, "--domain");
  ToricDomain X = io::domain_from_json(dj);
  if (a.point.empty()) throw io::InputError("--point is required");
  Point p = io::point_from_text(a.point);
  ShapeRegion S(X);
  Json prov{{"command", knotted ? "knotted" : "shape"}, {"domain", dj}, {"point", io::to_json(p)}};
  Json payload;
  std::string summary;
  if (!knotted) {
    bool member = shape_member(S, p);
    payload["member"] = member;
    summary = std::string(member ? "in" : "not in") + " the shape invariant of " + X.describe();
  } else if (!a.emb_x.empty()) {
    Rational x = parse_rational(a.emb_x, "--emb");
    bool k = emb_knotted_member(S, x, p);
    prov["emb"] = io::to_json(x);
    payload["knotted"] = k;
    summary = std::string(k ? "knotted" : "not detected as knotted") + " for images of E(1, " + x.str() + ")";
  } else {
    bool k = knotted_member(S, p);
    payload["knotted"] = k;
    summary = std::string(k ? "knotted torus exists" : "not in the knotted region") + " in " + X.describe();
  }
  if (!a.svg.empty()) svg::write(svg::knotted_scene(S, {p}), a.svg);
  return {kDefinitive, io::report(payload, prov), summary};
}

Outcome run_lift(const Args& a) {
  Json dj = load(a.domain, "--domain");
  Json pj = load(a.path, "--path");
  ToricDomain X = io::domain_from_json(dj);
  PolyPath path = io::path_from_json(pj);
  Json prov{{"command", "lift"}, {"domain", dj}, {"path", io::to_json(path)}};
  LiftVerdict v;
  if (!a.breakpoints.empty()) {
    std::vector<Rational> bps = parse_list(a.breakpoints, "--breakpoints");
    prov["breakpoints"] = Json::array();
    for (const Rational& t : bps) prov["breakpoints"].push_back(io::to_json(t));
    if (auto cert = general_criterion(X, path, bps)) {
      v.kind = LiftVerdict::Kind::Lifts;
      v.certificate = cert;
    } else {
      v = classify(X, path);
    }
  } else {
    v = classify(X, path);
  }
  if (!a.svg.empty()) svg::write(svg::lift_scene(X, {path}), a.svg);
  int code = v.kind == LiftVerdict::Kind::Undetermined ? kUndetermined : kDefinitive;
  return {code, io::report(io::to_json(v), prov), std::string("path ") + to_string(v.kind)};
}

Outcome run_capacity(const Args& a) {
  Rational A = parse_rational(a.a, "--a"), B = parse_rational(a.b, "--b");
  if (a.count == 0) throw io::InputError("--count must be at least 1");
  CapSequence seq = cap_sequence(A, B, a.count - 1);
  Json prov{{"command", "capacity"}, {"a", io::to_json(A)}, {"b", io::to_json(B)}, {"count", a.count}};
  return {kDefinitive, io::report(io::to_json(seq), prov),
          std::to_string(seq.entries.size()) + " capacities of E(" + A.str() + ", " + B.str() + ")"};
}

Outcome run_lattice(const Args& a) {
  Rational A = parse_rational(a.a, "--a"), B = parse_rational(a.b, "--b"), T = parse_rational(a.t, "--t");
  CountMode mode = a.mode == "brute_force" ? CountMode::BruteForce : CountMode::RowSum;
  if (a.mode != "row_sum" && a.mode != "brute_force") throw io::InputError("--mode must be row_sum or brute_force");
  BigInt n = lattice_count(A, B, T, mode);
  Json prov{{"command", "lattice"}, {"a", io::to_json(A)}, {"b", io::to_json(B)}, {"t", io::to_json(T)},
            {"mode", a.mode}};
  return {kDefinitive, io::report(Json{{"count", n.get_str()}}, prov), n.get_str() + " lattice points"};
}

Outcome run_embed(const Args& a) {
  Point from = io::point_from_text(a.from), into = io::point_from_text(a.into);
  EmbeddingReport r = embedding_check(from.r, from.s, into.r, into.s, a.horizon);
  Json prov{{"command", "embed"}, {"from", io::to_json(from)}, {"into", io::to_json(into)}, {"horizon", a.horizon}};
  return {kDefinitive, io::report(io::to_json(r), prov), to_string(r.kind)};
}

Outcome run_obstruct(const Args& a) {
  Json sj = load(a.source, "--source");
  Json tj = load(a.target, "--target");
  ObstructionInstance inst(io::domain_from_json(sj), io::domain_from_json(tj));
  Json prov{{"command", "obstruct"}, {"source", sj}, {"target", tj}};
  std::optional<Witness> w;
  if (!a.witness.empty()) {
    Json wj = load(a.witness, "--witness");
    w = io::witness_from_json(wj);
    prov["witness"] = io::to_json(*w);
  }
  std::optional<long> grid = a.search ? a.search : (w ? std::nullopt : std::optional<long>(4));
  if (grid) prov["search"] = *grid;
  Conclusion c = conclude(inst, w, grid);
  if (!a.svg.empty()) svg::write(svg::obstruct_scene(inst, c.witness ? c.witness : w), a.svg);
  int code = c.kind == Conclusion::Kind::Obstructed ? kDefinitive : kUndetermined;
  return {code, io::report(io::to_json(c), prov), std::string(to_string(c.kind)) + ": " + c.reason};
}

std::vector<EndPair> neg_pairs(const Args& a) {
  std::vector<EndPair> pairs;
  for (const std::string& s : a.neg) {
    EndPair p = parse_pair(s, "--neg");
    pairs.push_back(a.labels ? formula_pair_from_label(p.first, p.second) : p);
  }
  return pairs;
}

Outcome run_sft(const Args& a, const std::string& which) {
  Json prov{{"command", "sft " + which}};
  Json payload;
  if (which == "index") {
    std::vector<Rational> pos;
    for (const std::string& s : a.pos) pos.push_back(parse_rational(s, "--pos"));
    std::vector<EndPair> pairs = neg_pairs(a);
    prov["pos"] = Json::array();
    for (const Rational& p : pos) prov["pos"].push_back(io::to_json(p));
    prov["neg"] = pairs_json(pairs);
    if (!a.neg_cz.empty()) {
      if (!pairs.empty()) throw io::InputError("--neg and --neg-cz cannot be combined");
      std::vector<Rational> cz;
      for (const std::string& s : a.neg_cz) cz.push_back(parse_rational(s, "--neg-cz"));
      prov["neg_cz"] = Json::array();
      for (const Rational& q : cz) prov["neg_cz"].push_back(io::to_json(q));
      payload["index"] = index_general(EndData{pos, {}, 0}, cz);
    } else {
      payload["index"] = index_torus_ends(pos, pairs);
    }
  } else if (which == "bidegree") {
    EndPair d = parse_pair(a.degree, "--degree");
    std::vector<EndPair> pairs = neg_pairs(a);
    prov["neg"] = pairs_json(pairs);
    prov["degree"] = Json::array({d.first, d.second});
    payload["index"] = index_bidegree(pairs, d.first, d.second);
  } else {
    Json in = load(a.input, "--input");
    prov["input"] = in;
    BuildingData b;
    try {
      b.component_indices = in.at("indices").get<std::vector<long>>();
      if (in.contains("leaf_dims")) b.matched_leaf_dims = in.at("leaf_dims").get<std::vector<long>>();
    } catch (const Json::exception& e) {
      throw io::InputError(std::string("--input: ") + e.what());
    }
    if (in.contains("areas")) {
      for (std::size_t i = 0; i < in["areas"].size(); ++i) {
        b.component_areas.push_back(io::rational_from_json(in["areas"][i], "/areas/" + std::to_string(i)));
      }
    }
    BuildingTotals t = building_totals(b);
    payload["index"] = t.index;
    payload["area"] = io::to_json(t.area);
  }
  return {kDefinitive, io::report(payload, prov), "index " + payload["index"].dump()};
}

Outcome run_plot(const Args& a) {
  if (a.svg.empty()) throw io::InputError("--svg is required");
  Json prov{{"command", "plot"}, {"scene", a.scene}, {"svg", a.svg}};
  if (a.scene == "lift") {
    std::vector<PolyPath> paths;
    if (!a.path.empty()) paths.push_back(io::path_from_json(load(a.path, "--path")));
    svg::write(svg::lift_scene(io::domain_from_json(load(a.domain, "--domain")), paths), a.svg);
  } else if (a.scene == "knotted") {
    std::vector<Point> marks;
    if (!a.point.empty()) marks.push_back(io::point_from_text(a.point));
    svg::write(svg::knotted_scene(ShapeRegion(io::domain_from_json(load(a.domain, "--domain"))), marks), a.svg);
  } else if (a.scene == "obstruct") {
    ObstructionInstance inst(io::domain_from_json(load(a.source, "--source")),
                             io::domain_from_json(load(a.target, "--target")));
    std::optional<Witness> w;
    if (!a.witness.empty()) w = io::witness_from_json(load(a.witness, "--witness"));
    svg::write(svg::obstruct_scene(inst, w), a.svg);
  } else {
    throw io::InputError("--scene must be lift, knotted or obstruct");
  }
  return {kDefinitive, io::report(Json{{"written", a.svg}}, prov), "wrote " + a.svg};
}

int run_verify(const Args& a) {
  acceptance::Options opt;
  opt.only = a.only;
  auto outcomes = acceptance::run(opt);
  if (a.json) {
    Json arr = Json::array();
    for (const auto& o : outcomes) {
      Json row{{"id", o.id}, {"name", o.name}, {"passed", o.passed}, {"detail", o.detail}};
      if (a.timings) row["seconds"] = o.seconds;
      arr.push_back(row);
    }
    std::cout << io::dump(io::report(Json{{"criteria", arr}}, Json{{"command", "verify"}}));
  } else {
    std::cout << acceptance::format(outcomes, a.timings);
  }
  return acceptance::all_passed(outcomes) ? kDefinitive : kInputError;
}

void domain_flag(CLI::App* sub, Args& a) { sub->add_option("--domain", a.domain, "domain JSON file or inline JSON"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact shape invariants, path lifts and embedding obstructions for toric domains", "shapelift"};
  app.set_version_flag("--version", std::string(io::kToolVersion));
  app.require_subcommand(1);
  Args a;

  auto* shape = app.add_subcommand("shape", "membership in the shape invariant, r <= s");
  auto* knotted = app.add_subcommand("knotted", "membership in the knotted region");
  for (auto* sub : {shape, knotted}) {
    domain_flag(sub, a);
    sub->add_option("--point", a.point, "r,s");
    sub->add_option("--svg", a.svg, "write a figure");
  }
  knotted->add_option("--emb", a.emb_x, "test the knotted region for images of E(1, x)");

  auto* lift = app.add_subcommand("lift", "classify a path of tori");
  domain_flag(lift, a);
  lift->add_option("--path", a.path, "path JSON file or inline JSON");
  lift->add_option("--breakpoints", a.breakpoints, "t1,t2,... cut parameters for the general criterion");
  lift->add_option("--svg", a.svg, "write a figure");

  auto* capacity = app.add_subcommand("capacity", "ECH capacities of an ellipsoid, from index 0");
  capacity->add_option("--a", a.a)->required();
  capacity->add_option("--b", a.b)->required();
  capacity->add_option("--count", a.count, "number of entries");

  auto* lattice = app.add_subcommand("lattice", "lattice points with a i + b j <= t");
  lattice->add_option("--a", a.a)->required();
  lattice->add_option("--b", a.b)->required();
  lattice->add_option("--t", a.t)->required();
  lattice->add_option("--mode", a.mode, "row_sum or brute_force");

  auto* embed = app.add_subcommand("embed", "compare capacity sequences of two ellipsoids");
  embed->add_option("--from", a.from, "c,d")->required();
  embed->add_option("--into", a.into, "a,b")->required();
  embed->add_option("--horizon", a.horizon, "number of capacities compared");

  auto* obstruct = app.add_subcommand("obstruct", "witness-based obstruction into an ellipsoid");
  obstruct->add_option("--source", a.source, "source domain JSON");
  obstruct->add_option("--target", a.target, "target ball or ellipsoid JSON");
  obstruct->add_option("--witness", a.witness, "witness JSON {e_r, e_s, path}");
  obstruct->add_option("--search", a.search, "search grid 1/N when no witness verifies");
  obstruct->add_option("--svg", a.svg, "write a figure");

  auto* sft = app.add_subcommand("sft", "index and building arithmetic");
  sft->require_subcommand(1);
  std::string sft_which;
  auto* sft_index = sft->add_subcommand("index", "index from end data");
  sft_index->add_option("--pos", a.pos, "CZ + dim/2 of each positive end");
  sft_index->add_option("--neg", a.neg, "m,n of each negative torus end");
  sft_index->add_option("--neg-cz", a.neg_cz, "CZ - dim/2 of each negative end, instead of --neg");
  auto* sft_bideg = sft->add_subcommand("bidegree", "index of a curve in the compactified cobordism");
  sft_bideg->add_option("--neg", a.neg, "m,n of each negative torus end");
  sft_bideg->add_option("--degree", a.degree, "d1,d2");
  for (auto* sub : {sft_index, sft_bideg}) {
    sub->add_flag("--labels", a.labels, "read --neg as orbit labels (m,n) of type (-m,-n)");
  }
  auto* sft_build = sft->add_subcommand("building", "total index and area of a building");
  sft_build->add_option("--input", a.input, "JSON {indices, leaf_dims, areas}")->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_flag("--timings", a.timings, "show run times");
  verify->add_option("--only", a.only, "criterion ids");

  auto* plot = app.add_subcommand("plot", "draw a scene without deciding anything");
  plot->add_option("--scene", a.scene, "lift, knotted or obstruct")->required();
  domain_flag(plot, a);
  plot->add_option("--path", a.path);
  plot->add_option("--point", a.point);
  plot->add_option("--source", a.source);
  plot->add_option("--target", a.target);
  plot->add_option("--witness", a.witness);
  plot->add_option("--svg", a.svg)->required();

  app.add_flag("--json", a.json, "machine output only: no summary on stderr");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  for (auto* sub : sft->get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (verify->parsed()) return run_verify(a);
    Outcome out;
    if (shape->parsed()) out = run_shape(a, false);
    else if (knotted->parsed()) out = run_shape(a, true);
    else if (lift->parsed()) out = run_lift(a);
    else if (capacity->parsed()) out = run_capacity(a);
    else if (lattice->parsed()) out = run_lattice(a);
    else if (embed->parsed()) out = run_embed(a);
    else if (obstruct->parsed()) out = run_obstruct(a);
    else if (plot->parsed()) out = run_plot(a);
    else if (sft_index->parsed()) out = run_sft(a, "index");
    else if (sft_bideg->parsed()) out = run_sft(a, "bidegree");
    else out = run_sft(a, "building");
    std::cout << io::dump(out.payload);
    if (!a.json) std::cerr << out.summary << "\n";
    return out.code;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
}
