#include "shapelift/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "oracles/oracles.hpp"
#include "shapelift/echlattice.hpp"
#include "shapelift/errors.hpp"
#include "shapelift/obstruct.hpp"
#include "shapelift/pathlift.hpp"
#include "shapelift/sftindex.hpp"

namespace shapelift::acceptance {

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  long count = 0;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
  std::string summary(const std::string& what) const {
    return ok ? what : "failed: " + first_failure;
  }
};

struct Result {
  bool ok;
  std::string detail;
};

Rational q(const char* text) { return Rational::parse(text); }

Point pt(const char* r, const char* s) { return {q(r), q(s)}; }

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Rational random_positive(std::mt19937_64& rng, long hi, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  long d = den(rng);
  std::uniform_int_distribution<long> num(1, hi * d);
  return frac(num(rng), d);
}

// ---- 1 --------------------------------------------------------------------

Result shape_boundary_pair() {
  ShapeRegion B(ToricDomain::ball(q("301/100")));
  Check c;
  c.expect(shape_member(B, pt("1", "2")), "(1,2) should be in the shape invariant");
  c.expect(!shape_member(B, pt("2", "3")), "(2,3) should not be in the shape invariant");
  return {c.ok, c.summary("(1,2) member, (2,3) not, for B(301/100)")};
}

// ---- 2 --------------------------------------------------------------------

Result closed_form_counts() {
  Check c;
  for (long k = 1; k <= 6; ++k) {
    for (long A = 0; A <= 12; ++A) {
      Rational t(A * k * (k + 1));
      BigInt want = closed_form_R(k, A);
      std::string at = "k=" + std::to_string(k) + " A=" + std::to_string(A);
      c.expect(oracle::lattice_points(k, (k + 1) * (k + 1), t) == want.get_si(), "first triangle " + at);
      c.expect(oracle::lattice_points(k + 1, k * (k + 1), t) == want.get_si(), "second triangle " + at);
    }
  }
  return {c.ok && c.count == 156, c.summary(std::to_string(c.count) + " exact equalities")};
}

// ---- 3 --------------------------------------------------------------------

Result ellipsoid_embedding_sequences() {
  Check c;
  for (long k = 1; k <= 5; ++k) {
    c.expect(verify_prop_embedding(k, Rational(30 * k * (k + 1))), "lattice inequality at k=" + std::to_string(k));
  }
  long compared = 0;
  for (long k = 1; k <= 3; ++k) {
    auto lhs = cap_sequence(k, (k + 1) * (k + 1), 2000).entries;
    auto rhs = cap_sequence(k + 1, k * (k + 1), 2000).entries;
    c.expect(lhs.size() == 2001 && rhs.size() == 2001, "sequence length");
    for (std::size_t j = 0; j < lhs.size() && j < rhs.size(); ++j) {
      c.expect(lhs[j] <= rhs[j], "sequence entry j=" + std::to_string(j) + " k=" + std::to_string(k));
      ++compared;
    }
  }
  return {c.ok, c.summary("k=1..5 lattice inequality, " + std::to_string(compared) + " sequence entries")};
}

// ---- 4 --------------------------------------------------------------------

Result volume_filling() {
  Check c;
  c.expect(volume(ToricDomain::ellipsoid(1, 4)) == Rational(2), "vol E(1,4) = 2");
  c.expect(volume(ToricDomain::ball(2)) == Rational(2), "vol B(2) = 2");
  EmbeddingReport r = embedding_check(1, 4, 2, 2, 2000);
  c.expect(r.kind == EmbeddingReport::Kind::NoObstructionUpTo && r.horizon == 2000,
           std::string("report was ") + to_string(r.kind));
  return {c.ok, c.summary("volumes 2 = 2, no capacity obstruction up to 2000")};
}

// ---- 5 --------------------------------------------------------------------

Result ech_remark() {
  Check c;
  Rational lhs = ech_capacity(1, 3, 3);
  Rational rhs = ech_capacity(q("6/5"), q("12/5"), 3);
  c.expect(lhs == Rational(3), "c_3(E(1,3)) = " + lhs.str());
  c.expect(rhs == q("12/5"), "c_3(E(6/5,12/5)) = " + rhs.str());
  c.expect(rhs < lhs, "strict inequality");
  return {c.ok, c.summary("c_3(E(1,3)) = 3 > 12/5 = c_3(E(6/5,12/5))")};
}

// ---- 6 --------------------------------------------------------------------

Result pl_obstruction() {
  ObstructionInstance inst(ToricDomain::toric_pl({pt("0", "24"), pt("2", "17"), pt("19", "0")}),
                           ToricDomain::ball(20));
  Witness w{16, 16, PolyPath({pt("7", "8"), pt("5/2", "16"), pt("2", "84/5"), pt("1/2", "22")})};
  Check c;
  std::string why = witness_failure(inst, w);
  c.expect(why.empty(), "given witness: " + why);
  auto found = search_witness(inst, 4);
  c.expect(found.has_value(), "search at 1/4 found nothing");
  if (found) c.expect(verify_witness(inst, *found), "searched witness does not verify");
  return {c.ok, c.summary("given witness verifies, search at 1/4 finds one")};
}

// ---- 7 --------------------------------------------------------------------

Result fiber_disconnection() {
  ToricDomain X = ToricDomain::ellipsoid(1, 3);
  Check c;
  LiftVerdict direct = classify(X, PolyPath({pt("9/20", "3/2"), pt("9/20", "16/5")}));
  c.expect(direct.kind == LiftVerdict::Kind::Obstructed, std::string("vertical path: ") + to_string(direct.kind));
  PolyPath detour({pt("9/20", "3/2"), pt("3/10", "4/5"), pt("3/10", "16/5")});
  LiftVerdict around = classify(X, detour);
  c.expect(around.kind == LiftVerdict::Kind::Lifts, std::string("detour: ") + to_string(around.kind));
  if (around.certificate) c.expect(verify_certificate(X, detour, *around.certificate), "detour certificate");
  c.expect(knotted_member(ShapeRegion(X), pt("9/20", "3/2")), "(9/20,3/2) should be knotted");
  return {c.ok, c.summary("vertical path obstructed, detour lifts, start point knotted")};
}

// ---- 8 --------------------------------------------------------------------

Result orientation_asymmetry() {
  ToricDomain X = ToricDomain::ellipsoid(1, 3);
  ShapeRegion S(X);
  PolyPath loop({pt("3/10", "4/5"), pt("3/10", "3"), pt("9/20", "16/5"), pt("9/20", "3/2")});
  Check c;
  for (const Point& v : loop.vertices()) c.expect(shape_member(S, v), "loop vertex outside the shape invariant");
  auto cert = general_criterion(X, loop);
  c.expect(cert.has_value(), "forward loop has no certificate");
  if (cert) c.expect(verify_certificate(X, loop, *cert), "forward certificate does not verify");
  PolyPath leg = loop.reversed().sub_path(0, 1);
  auto pre = obstruction_precondition_failure(S, leg);
  c.expect(!pre.has_value(), "reverse leg precondition: " + pre.value_or(""));
  c.expect(obstruction_I(S, leg).has_value(), "reverse leg not obstructed");
  return {c.ok, c.summary("loop lifts forward, reversed first leg obstructed")};
}

// ---- 9 --------------------------------------------------------------------

Result specialization_grid() {
  struct Target {
    ToricDomain X;
    Rational extent;
  };
  std::vector<Target> targets{{ToricDomain::ball(3), 3}, {ToricDomain::ellipsoid(1, 3), 3},
                              {ToricDomain::polydisk(1, 2), 2}};
  Check c;
  long compared = 0;
  for (const Target& t : targets) {
    ShapeRegion S(t.X);
    for (long i = 1; i <= 50; ++i) {
      for (long j = 1; j <= 50; ++j) {
        Rational r = t.extent * frac(i, 100), s = t.extent * frac(j, 50);
        if (!(r < s) || !moment_contains(t.X, {r, s}, kOpenReducedPositive)) continue;
        PolyPath p({Point{r, s}, Point{r, t.extent + 1}});
        bool g = general_criterion(t.X, p).has_value();
        bool th = sufficiency_II(S, p).has_value();
        c.expect(g == th, t.X.describe() + " r=" + r.str() + " s=" + s.str());
        ++compared;
      }
    }
  }
  return {c.ok && compared > 0, c.summary(std::to_string(compared) + " vertical paths agree")};
}

// ---- 10 -------------------------------------------------------------------

void lattice_modes(Check& c) {
  std::mt19937_64 rng(1001);
  int done = 0;
  while (done < 500) {
    Rational a = random_positive(rng, 6, 9), b = random_positive(rng, 6, 9);
    Rational t = random_positive(rng, 40, 9);
    if (t / a > 200 || t / b > 200) continue;
    ++done;
    BigInt row = lattice_count(a, b, t, CountMode::RowSum);
    c.expect(row == lattice_count(a, b, t, CountMode::BruteForce), "RowSum vs BruteForce " + a.str() + " " + b.str());
    c.expect(row.get_si() == oracle::lattice_points(a, b, t), "RowSum vs enumeration");
  }
}

void first_crossing(Check& c) {
  std::mt19937_64 rng(1002);
  for (int e = 0; e < 50; ++e) {
    Rational a = random_positive(rng, 4, 6), b = random_positive(rng, 4, 6);
    auto seq = cap_sequence(a, b, 200).entries;
    auto combos = oracle::combos_up_to(a, b, seq.back());
    c.expect(combos.size() >= seq.size(), "enumeration too short");
    Rational below(-1);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k > 0 && seq[k - 1] < seq[k]) below = seq[k - 1];
      long need = static_cast<long>(k) + 1;
      std::string at = "E(" + a.str() + "," + b.str() + ") k=" + std::to_string(k);
      if (k < combos.size()) c.expect(combos[k] == seq[k], "sequence vs enumeration " + at);
      c.expect(oracle::lattice_points(a, b, seq[k]) >= need, "count at N_k " + at);
      // R is constant on [below, N_k), so N_k is the first crossing
      if (below.sign() >= 0) c.expect(oracle::lattice_points(a, b, below) < need, "count below N_k " + at);
    }
  }
}

void claim_dichotomy(Check& c) {
  for (long k = 1; k <= 10; ++k) {
    for (long A = 0; A <= 50; ++A) {
      ClaimBC v = claim_bc(k, A);
      long b = A / (k + 1), B = A - b * (k + 1);
      long cc = (A * k) / (k + 1), C = A * k - cc * (k + 1);
      std::string at = "k=" + std::to_string(k) + " A=" + std::to_string(A);
      c.expect(v.b == b && v.B == B && v.c == cc && v.C == C, "division data " + at);
      c.expect((B == 0 && C == 0) || B + C == k + 1, "dichotomy " + at);
    }
  }
}

void pick_identity(Check& c) {
  std::mt19937_64 rng(1003);
  std::uniform_int_distribution<long> coord(0, 12);
  int done = 0;
  while (done < 100) {
    std::vector<Point> poly;
    if (done % 2 == 0) {
      Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
      Rational turn = cross(b - a, d - a);
      if (turn.sign() == 0) continue;
      poly = turn.sign() > 0 ? std::vector<Point>{a, b, d} : std::vector<Point>{a, d, b};
    } else {
      long y0 = coord(rng), h = coord(rng) + 1;
      long x0 = coord(rng), w0 = coord(rng) + 1, x1 = coord(rng), w1 = coord(rng) + 1;
      poly = {Point{x0, y0}, Point{x0 + w0, y0}, Point{x1 + w1, y0 + h}, Point{x1, y0 + h}};
    }
    ++done;
    auto rows = oracle::convex_row_counts(poly);
    c.expect(pick_check(poly, rows.interior, rows.boundary), "Pick identity on polygon " + std::to_string(done));
    LatticeCounts counted = count_lattice_points(poly);
    c.expect(counted.interior == rows.interior && counted.boundary == rows.boundary, "lattice counts vs rows");
  }
}

void half_plane_persistence(Check& c) {
  // the premise M r + N s > 0 with r <= s and M + N <= 0 forces M < 0 < N <= -M
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<long> mdist(-8, -1);
  std::uniform_int_distribution<int> segs(1, 4);
  int done = 0;
  while (done < 1000) {
    long M = mdist(rng);
    std::uniform_int_distribution<long> ndist(1, -M);
    long N = ndist(rng);
    Rational r0 = random_positive(rng, 5, 8);
    Rational s0 = r0 + random_positive(rng, 5, 8);
    if (!(Rational(M) * r0 + Rational(N) * s0 > 0)) continue;
    std::vector<Point> pts{{r0, s0}};
    for (int k = segs(rng); k > 0; --k) {
      const Point& p = pts.back();
      Point nq{random_positive(rng, 6, 8), random_positive(rng, 6, 8)};
      if (nq.s < nq.r || nq.r * p.s > p.r * nq.s || nq == p) continue;
      pts.push_back(nq);
    }
    if (pts.size() < 2) continue;
    ++done;
    PolyPath path(pts);
    std::string at = "M=" + std::to_string(M) + " N=" + std::to_string(N);
    // affine on each segment: positivity at the vertices covers every t
    for (const Point& v : pts) c.expect(Rational(M) * v.r + Rational(N) * v.s > 0, "vertex " + at);
    IntervalSet where = param_set(path, Region::of({form_gt(M, N, 0)}));
    c.expect(where.covers(Interval::closed(0, path.end_param())), "parameter set " + at);
  }
}

Result oracle_suites() {
  std::vector<std::pair<const char*, void (*)(Check&)>> suites{{"lattice modes", lattice_modes},
                                                               {"first crossing", first_crossing},
                                                               {"division dichotomy", claim_dichotomy},
                                                               {"Pick", pick_identity},
                                                               {"half-plane persistence", half_plane_persistence}};
  std::string detail;
  for (const auto& [name, fn] : suites) {
    Check c;
    fn(c);
    if (!c.ok) return {false, std::string(name) + " failed: " + c.first_failure};
    detail += (detail.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(c.count);
  }
  return {true, detail + " checks"};
}

// ---- 11 -------------------------------------------------------------------

Result sft_arithmetic() {
  Check c;
  for (long k = 1; k <= 6; ++k) {
    c.expect(index_general(EndData{{Rational(2 * k + 3)}, {}, 0}, {Rational(2 * k + 2)}) == 1,
             "(2k+3) - (2k+2) at k=" + std::to_string(k));
  }
  c.expect(index_bidegree({formula_pair_from_label(0, 1)}, 0, 1) == 1, "bidegree (0,1) with one end");
  for (long k = 1; k <= 6; ++k) {
    for (long e = k; e <= k + 3; ++e) {
      // C_0 carries e - k negative ends plus k extra index, every other component one end
      long e0 = e - k;
      std::vector<long> indices{e0 + k};
      for (long i = 0; i < k; ++i) indices.push_back(1);
      long sum = 0;
      for (long v : indices) sum += v;
      std::string at = "e=" + std::to_string(e) + " k=" + std::to_string(k);
      c.expect(sum == e + k, "sum of indices " + at);
      BuildingTotals t = building_totals(BuildingData{indices, std::vector<long>(k, 1), {}, {}});
      c.expect(t.index == e, "building index " + at);
    }
  }
  return {c.ok, c.summary("index identities for k=1..6 and " + std::to_string((c.count - 7) / 2) + " buildings")};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  Result (*fn)();
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "shape invariant boundary pair", 1, shape_boundary_pair},
      {2, "closed-form lattice counts", 10, closed_form_counts},
      {3, "ellipsoid embedding via lattice counts", 60, ellipsoid_embedding_sequences},
      {4, "volume-filling ellipsoid into ball", 60, volume_filling},
      {5, "ECH capacity comparison", 5, ech_remark},
      {6, "toric domain obstruction witness", 30, pl_obstruction},
      {7, "fiber disconnection in E(1,3)", 5, fiber_disconnection},
      {8, "orientation asymmetry of a loop", 5, orientation_asymmetry},
      {9, "specialization on a 50x50 grid", 30, specialization_grid},
      {10, "oracle suites", 60, oracle_suites},
      {11, "index arithmetic", 5, sft_arithmetic},
  };
  return all;
}

Outcome run_one(const Criterion& cr) {
  Outcome o;
  o.id = cr.id;
  o.name = cr.name;
  o.budget_seconds = cr.budget;
  auto start = std::chrono::steady_clock::now();
  Result r{false, ""};
  try {
    r = cr.fn();
  } catch (const std::exception& e) {
    r = {false, std::string("error: ") + e.what()};
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.passed = r.ok && o.seconds <= cr.budget;
  o.detail = r.detail;
  if (r.ok && !o.passed) o.detail += " (over the time budget)";
  return o;
}

}  // namespace

unsigned thread_cap() {
  if (const char* env = std::getenv("SHAPELIFT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Outcome> run(const Options& options) {
  std::vector<const Criterion*> selected;
  for (const Criterion& c : criteria()) {
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), c.id) != options.only.end()) {
      selected.push_back(&c);
    }
  }
  std::vector<Outcome> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) out[i] = run_one(*selected[i]);
  };
  unsigned n = std::min<std::size_t>(options.threads ? options.threads : thread_cap(), selected.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return out;
}

std::string format(const std::vector<Outcome>& outcomes, bool timings) {
  std::ostringstream os;
  int passed = 0;
  for (const Outcome& o : outcomes) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-42s ", o.passed ? "PASS" : "FAIL", o.id, o.name.c_str());
    os << head << o.detail;
    if (timings) {
      char t[64];
      std::snprintf(t, sizeof t, "  [%.2f s of %.0f s]", o.seconds, o.budget_seconds);
      os << t;
    }
    os << "\n";
    passed += o.passed;
  }
  os << passed << "/" << outcomes.size() << " criteria passed\n";
  return os.str();
}

}  // namespace shapelift::acceptance
