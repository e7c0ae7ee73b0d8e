#include "shapelift/obstruct.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "shapelift/errors.hpp"

namespace shapelift {

namespace {

Region open_triangle(const Rational& a, const Rational& b) {
  return Region::of({form_ge(1, 0, 0), form_ge(0, 1, 0), form_lt(b, a, a * b)});
}

struct Grid {
  long N;
  long max_i;
  long max_j;
  long key(long i, long j) const { return i * (max_j + 1) + j; }
  Point at(long i, long j) const { return {Rational(BigInt(i), BigInt(N)), Rational(BigInt(j), BigInt(N))}; }
};

bool segment_inside(const Region& region, const Point& p, const Point& q) {
  return param_set(PolyPath({p, q}), region).covers(Interval::closed(0, 1));
}

std::vector<Point> merge_collinear(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (out.size() >= 2) {
      const Point& a = out[out.size() - 2];
      const Point& b = out.back();
      Point u = b - a;
      Point v = p - b;
      if (cross(u, v).sign() == 0 && (u.r * v.r + u.s * v.s).sign() > 0) {
        out.back() = p;
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

ObstructionInstance::ObstructionInstance(ToricDomain source, ToricDomain target)
    : source_(std::move(source)), target_(std::move(target)) {
  auto tri = target_.triangle();
  auto k = target_.integral_ratio();
  if (!tri || !k) throw DomainError("target must be a ball or an ellipsoid E(a, ka) with integral k");
  a_ = tri->first;
  b_ = tri->second;
  k_ = *k;
}

Rational ObstructionInstance::excluded_a() const { return a_ * Rational(k_) / Rational(BigInt(k_ + 1)); }

bool ObstructionInstance::source_inside_target() const {
  MomentQuery closed{true, false, false};
  for (const Point& v : image_outline(source_)) {
    if (!moment_contains(target_, v, closed)) return false;
  }
  return true;
}

std::string witness_failure(const ObstructionInstance& inst, const Witness& w) {
  const ToricDomain& X = inst.source();
  const PolyPath& path = w.path;
  if (w.e_r.sign() <= 0 || w.e_s.sign() <= 0) return "inner ellipsoid needs positive parameters";
  if (!triangle_in_closed_image(X, w.e_r, w.e_s)) return "inner ellipsoid not inside the source";
  if (inst.a() < w.e_r || inst.b() < w.e_s) return "inner ellipsoid not inside the target";
  if (!(inst.excluded_a() < w.e_r || inst.b() < w.e_s)) return "inner ellipsoid fits in the excluded ellipsoid";
  for (const Point& v : path.vertices()) {
    if (v.s.sign() <= 0) return "path needs s > 0";
    if (v.s < v.r) return "path leaves r <= s";
  }
  if (!param_set(path, moment_region(X, kOpenImage)).covers(Interval::closed(0, path.end_param()))) {
    return "path leaves the source image";
  }
  Rational k1 = Rational(BigInt(inst.k() + 1));
  if (linear_extrema_on_path(k1, 1, path).min < inst.b()) return "path enters the excluded ellipsoid";
  if (!open_triangle(w.e_r, w.e_s).contains(path.front())) return "path does not start in the inner ellipsoid";
  if (open_triangle(inst.a(), inst.b()).contains(path.back())) return "path does not end outside the target";
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    if (segment_ratio_trend(path.segment(i)) == Trend::NonDecreasing) {
      return "ratio r/s increases on segment " + std::to_string(i);
    }
  }
  if (inst.source_inside_target()) return "source image lies inside the target";
  return "";
}

std::optional<Witness> search_witness(const ObstructionInstance& inst, long N) {
  if (N < 1) throw DomainError("search grid needs N >= 1");
  const ToricDomain& X = inst.source();
  if (inst.source_inside_target()) return std::nullopt;

  Rational max_r = 0, max_s = 0;
  for (const Point& v : image_outline(X)) {
    max_r = max(max_r, v.r);
    max_s = max(max_s, v.s);
  }
  Grid grid{N, (max_r * Rational(N)).floor().get_si(), (max_s * Rational(N)).floor().get_si()};

  Rational k1 = Rational(BigInt(inst.k() + 1));
  Region band = moment_region(X, kOpenImage)
                    .intersect(form_ge(k1, 1, inst.b()))
                    .intersect(form_le(1, -1, 0))
                    .intersect(form_gt(1, 0, 0))
                    .intersect(form_gt(0, 1, 0));
  Region target_open = open_triangle(inst.a(), inst.b());

  std::vector<std::pair<long, long>> nodes;
  std::unordered_map<long, std::size_t> index;
  for (long i = 1; i <= grid.max_i; ++i) {
    for (long j = i; j <= grid.max_j; ++j) {
      if (band.contains(grid.at(i, j))) {
        index[grid.key(i, j)] = nodes.size();
        nodes.emplace_back(i, j);
      }
    }
  }

  // Reverse breadth-first search from the nodes outside the target; next[v]
  // is the following node on a shortest admissible path from v.
  const std::size_t none = nodes.size();
  std::vector<std::size_t> next(nodes.size(), none);
  std::vector<bool> reached(nodes.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (!target_open.contains(grid.at(nodes[v].first, nodes[v].second))) {
      reached[v] = true;
      queue.push_back(v);
    }
  }
  constexpr long kRadius = 4;
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop_front();
    auto [qi, qj] = nodes[q];
    Point qp = grid.at(qi, qj);
    for (long di = -kRadius; di <= kRadius; ++di) {
      for (long dj = -kRadius; dj <= kRadius; ++dj) {
        if (di == 0 && dj == 0) continue;
        long pi = qi + di, pj = qj + dj;
        if (pi < 1 || pj < 1 || pi > grid.max_i || pj > grid.max_j) continue;
        auto it = index.find(grid.key(pi, pj));
        if (it == index.end()) continue;
        std::size_t p = it->second;
        if (reached[p]) continue;
        Point pp = grid.at(pi, pj);
        if (qp.r * pp.s > pp.r * qp.s) continue;
        if (!segment_inside(band, pp, qp)) continue;
        reached[p] = true;
        next[p] = q;
        queue.push_back(p);
      }
    }
  }

  Rational h(BigInt(1), BigInt(N));
  for (BigInt ei = (inst.a() * Rational(N)).floor(); Rational(ei) * h > inst.excluded_a(); --ei) {
    Rational e_r = Rational(ei) * h;
    std::optional<Rational> e_s;
    for (BigInt ej = (min(inst.b(), max_s) * Rational(N)).floor(); ej >= 1; --ej) {
      Rational cand = Rational(ej) * h;
      if (triangle_in_closed_image(X, e_r, cand)) {
        e_s = cand;
        break;
      }
    }
    if (!e_s) continue;
    Region start_region = open_triangle(e_r, *e_s);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (next[v] == none) continue;
      Point start = grid.at(nodes[v].first, nodes[v].second);
      if (!start_region.contains(start)) continue;
      std::vector<Point> pts{start};
      for (std::size_t u = next[v]; u != none; u = next[u]) pts.push_back(grid.at(nodes[u].first, nodes[u].second));
      Witness w{e_r, *e_s, PolyPath(merge_collinear(pts))};
      if (verify_witness(inst, w)) return w;
    }
  }
  return std::nullopt;
}

const char* to_string(Conclusion::Kind k) {
  return k == Conclusion::Kind::Obstructed ? "obstructed" : "inconclusive";
}

Conclusion conclude(const ObstructionInstance& inst, const std::optional<Witness>& w,
                    std::optional<long> search_grid) {
  Conclusion out;
  if (inst.source_inside_target()) {
    out.reason = "source image lies inside the target, so an embedding exists by inclusion";
    return out;
  }
  if (w) {
    std::string failure = witness_failure(inst, *w);
    if (failure.empty()) {
      out.kind = Conclusion::Kind::Obstructed;
      out.witness = w;
      out.reason = "supplied witness verified";
      return out;
    }
    out.reason = "supplied witness rejected: " + failure;
  }
  if (search_grid) {
    if (auto found = search_witness(inst, *search_grid)) {
      out.kind = Conclusion::Kind::Obstructed;
      out.witness = std::move(found);
      out.reason = "witness found by grid search with step 1/" + std::to_string(*search_grid);
      return out;
    }
    if (out.reason.empty()) out.reason = "no witness found on grid 1/" + std::to_string(*search_grid);
  }
  if (out.reason.empty()) out.reason = "no witness supplied";
  return out;
}

}  // namespace shapelift
