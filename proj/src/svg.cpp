#include "shapelift/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "shapelift/errors.hpp"
#include "shapelift/json_io.hpp"

namespace shapelift::svg {

namespace {

constexpr double kPlot = 400.0;
constexpr double kMargin = 40.0;
constexpr double kLegendWidth = 220.0;

struct Style {
  const char* colour;
  bool filled;
  const char* dash;
};

Style style_of(const std::string& tag) {
  static const std::map<std::string, Style> styles{
      {"image", {"#222222", false, ""}},       {"target", {"#1f5fbf", false, ""}},
      {"witness", {"#2a9d3a", false, ""}},     {"shape", {"#9ecae1", true, ""}},
      {"flexible", {"#a1d99b", true, ""}},     {"knotted", {"#fdae6b", true, ""}},
      {"excluded", {"#bdbdbd", true, ""}},     {"reduced", {"#dadaeb", true, ""}},
      {"knot", {"#e6550d", false, "6 4"}},     {"boundary", {"#636363", false, "6 4"}},
      {"diagonal", {"#999999", false, "2 3"}}, {"path", {"#d62728", false, ""}},
  };
  auto it = styles.find(tag);
  return it == styles.end() ? Style{"#555555", false, ""} : it->second;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Viewport {
 public:
  Viewport(const Rational& width, const Rational& height) {
    if (width.sign() <= 0 || height.sign() <= 0) throw DomainError("scene needs a positive extent");
    double extent = std::max(width.to_double(), height.to_double());
    scale_ = kPlot / extent;
    plot_w_ = width.to_double() * scale_;
    plot_h_ = height.to_double() * scale_;
  }

  std::string x(const Rational& r) const { return num(kMargin + r.to_double() * scale_); }
  std::string y(const Rational& s) const { return num(kMargin + plot_h_ - s.to_double() * scale_); }
  std::string xy(const Point& p) const { return x(p.r) + "," + y(p.s); }
  double plot_w() const { return plot_w_; }
  double plot_h() const { return plot_h_; }

 private:
  double scale_ = 1;
  double plot_w_ = 0;
  double plot_h_ = 0;
};

std::string points_attr(const Viewport& vp, const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + vp.xy(pts[i]);
  return out;
}

Rational extent_of(const std::vector<Point>& pts, bool use_r) {
  Rational m = 0;
  for (const Point& p : pts) m = max(m, use_r ? p.r : p.s);
  return m;
}

void fit(Scene& scene) {
  std::vector<Point> all;
  for (const Outline& o : scene.outlines) all.insert(all.end(), o.vertices.begin(), o.vertices.end());
  for (const TaggedPath& p : scene.paths) all.insert(all.end(), p.path.vertices().begin(), p.path.vertices().end());
  all.insert(all.end(), scene.marks.begin(), scene.marks.end());
  Rational pad{BigInt(11), BigInt(10)};
  scene.width = max(extent_of(all, true), Rational(1)) * pad;
  scene.height = max(extent_of(all, false), Rational(1)) * pad;
}

std::vector<Point> triangle(const Rational& a, const Rational& b) { return {{0, 0}, {a, 0}, {0, b}}; }

void add_diagonal(Scene& scene) { scene.lines.push_back({"diagonal", "r = s", AffineForm{1, -1, 0}}); }

}  // namespace

std::vector<std::vector<Point>> clipped_cells(const Region& region, const Rational& width, const Rational& height) {
  std::vector<std::vector<Point>> out;
  for (const Cell& cell : region.cells()) {
    std::vector<Point> poly{{0, 0}, {width, 0}, {width, height}, {0, height}};
    for (const HalfPlane& h : cell) {
      HalfPlane closed = h;
      closed.strict = false;
      poly = clip_polygon(poly, closed);
      if (poly.size() < 3) break;
    }
    if (poly.size() >= 3 && shoelace_area(poly).sign() > 0) out.push_back(std::move(poly));
  }
  return out;
}

std::optional<std::pair<Point, Point>> clipped_line(const AffineForm& form, const Rational& width,
                                                    const Rational& height) {
  std::vector<Point> hits;
  auto keep = [&](Point p) {
    if (p.r.sign() < 0 || p.s.sign() < 0 || width < p.r || height < p.s) return;
    if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  if (form.beta.sign() != 0) {
    keep({0, form.bound / form.beta});
    keep({width, (form.bound - form.alpha * width) / form.beta});
  }
  if (form.alpha.sign() != 0) {
    keep({form.bound / form.alpha, 0});
    keep({(form.bound - form.beta * height) / form.alpha, height});
  }
  if (hits.size() < 2) return std::nullopt;
  auto less = [](const Point& a, const Point& b) { return a.r < b.r || (a.r == b.r && a.s < b.s); };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), less);
  return std::make_pair(*lo, *hi);
}

std::string render(const Scene& scene) {
  if (scene.outlines.empty() && scene.regions.empty() && scene.paths.empty()) {
    throw DomainError("scene is empty");
  }
  Viewport vp(scene.width, scene.height);
  std::size_t legend_rows = scene.outlines.size() + scene.regions.size() + scene.lines.size() + scene.paths.size();
  double canvas_w = kMargin * 2 + vp.plot_w() + kLegendWidth;
  double canvas_h = std::max(kMargin * 2 + vp.plot_h(), kMargin * 2 + 20.0 * static_cast<double>(legend_rows));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(canvas_w) << "\" height=\"" << num(canvas_h)
     << "\" viewBox=\"0 0 " << num(canvas_w) << " " << num(canvas_h) << "\">\n";
  os << "<title>" << escape(scene.title) << "</title>\n";

  std::vector<std::string> marker_tags;
  for (const TaggedPath& p : scene.paths) {
    if (std::find(marker_tags.begin(), marker_tags.end(), p.tag) == marker_tags.end()) marker_tags.push_back(p.tag);
  }
  if (!marker_tags.empty()) {
    os << "<defs>\n";
    for (const std::string& tag : marker_tags) {
      os << "<marker id=\"arrow-" << escape(tag)
         << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
         << "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << style_of(tag).colour << "\"/></marker>\n";
    }
    os << "</defs>\n";
  }

  os << "<rect x=\"0\" y=\"0\" width=\"" << num(canvas_w) << "\" height=\"" << num(canvas_h)
     << "\" fill=\"white\"/>\n";

  for (const TaggedRegion& reg : scene.regions) {
    auto cells = clipped_cells(reg.region, scene.width, scene.height);
    if (cells.empty()) continue;
    Style st = style_of(reg.tag);
    std::string common = "class=\"region\" data-tag=\"" + escape(reg.tag) + "\" fill=\"" + st.colour +
                         "\" fill-opacity=\"0.6\" stroke=\"none\"";
    if (cells.size() == 1) {
      os << "<polygon " << common << " points=\"" << points_attr(vp, cells[0]) << "\"/>\n";
    } else {
      os << "<path " << common << " d=\"";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t i = 0; i < cells[c].size(); ++i) os << (i ? " L" : (c ? " M" : "M")) << vp.xy(cells[c][i]);
        os << " Z";
      }
      os << "\"/>\n";
    }
  }

  // axes
  os << "<line class=\"axis\" x1=\"" << vp.x(0) << "\" y1=\"" << vp.y(0) << "\" x2=\"" << vp.x(scene.width)
     << "\" y2=\"" << vp.y(0) << "\" stroke=\"black\"/>\n";
  os << "<line class=\"axis\" x1=\"" << vp.x(0) << "\" y1=\"" << vp.y(0) << "\" x2=\"" << vp.x(0) << "\" y2=\""
     << vp.y(scene.height) << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << vp.x(scene.width) << "\" y=\"" << num(kMargin + vp.plot_h() + 16) << "\">r</text>\n";
  os << "<text x=\"" << num(kMargin - 16) << "\" y=\"" << vp.y(scene.height) << "\">s</text>\n";

  for (const Outline& o : scene.outlines) {
    Style st = style_of(o.tag);
    os << "<polygon class=\"outline\" data-tag=\"" << escape(o.tag) << "\" fill=\"none\" stroke=\"" << st.colour
       << "\" stroke-width=\"2\" points=\"" << points_attr(vp, o.vertices) << "\"/>\n";
  }

  for (const Line& l : scene.lines) {
    auto seg = clipped_line(l.form, scene.width, scene.height);
    if (!seg) continue;
    Style st = style_of(l.tag);
    os << "<line class=\"line\" data-tag=\"" << escape(l.tag) << "\" x1=\"" << vp.x(seg->first.r) << "\" y1=\""
       << vp.y(seg->first.s) << "\" x2=\"" << vp.x(seg->second.r) << "\" y2=\"" << vp.y(seg->second.s)
       << "\" stroke=\"" << st.colour << "\" stroke-width=\"1.5\"";
    if (*st.dash) os << " stroke-dasharray=\"" << st.dash << "\"";
    os << "/>\n";
  }

  for (const TaggedPath& p : scene.paths) {
    Style st = style_of(p.tag);
    os << "<polyline class=\"path\" data-tag=\"" << escape(p.tag) << "\" fill=\"none\" stroke=\"" << st.colour
       << "\" stroke-width=\"2\" marker-mid=\"url(#arrow-" << escape(p.tag) << ")\" marker-end=\"url(#arrow-"
       << escape(p.tag) << ")\" points=\"" << points_attr(vp, p.path.vertices()) << "\"/>\n";
  }

  for (const Point& m : scene.marks) {
    os << "<circle class=\"mark\" cx=\"" << vp.x(m.r) << "\" cy=\"" << vp.y(m.s) << "\" r=\"3\" fill=\"black\"/>\n";
  }

  double lx = kMargin * 2 + vp.plot_w();
  double ly = kMargin;
  auto legend_row = [&](const std::string& tag, const std::string& label, bool swatch) {
    Style st = style_of(tag);
    if (swatch) {
      os << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly - 10) << "\" width=\"14\" height=\"10\" fill=\""
         << st.colour << "\"/>";
    } else {
      os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 5) << "\" x2=\"" << num(lx + 14) << "\" y2=\""
         << num(ly - 5) << "\" stroke=\"" << st.colour << "\" stroke-width=\"2\"/>";
    }
    os << "<text x=\"" << num(lx + 20) << "\" y=\"" << num(ly) << "\" font-size=\"12\">" << escape(label)
       << "</text>\n";
    ly += 20;
  };
  os << "<g class=\"legend\">\n";
  for (const Outline& o : scene.outlines) legend_row(o.tag, o.label, false);
  for (const TaggedRegion& r : scene.regions) legend_row(r.tag, r.label, true);
  for (const Line& l : scene.lines) legend_row(l.tag, l.label, false);
  for (const TaggedPath& p : scene.paths) legend_row(p.tag, p.label, false);
  os << "</g>\n</svg>\n";
  return os.str();
}

void write(const Scene& scene, const std::string& file) {
  std::string text = render(scene);
  std::ofstream out(file);
  if (!out) throw io::InputError(file + ": cannot write");
  out << text;
  if (!out) throw io::InputError(file + ": write failed");
}

Region knotted_region(const ShapeRegion& X) {
  AffineForm form = knot_form(X);
  return moment_region(X.domain(), kOpenReducedPositive)
      .intersect(form_le(1, 0, strip_bound(X)))
      .intersect(form_gt(form.alpha, form.beta, form.bound));
}

Scene lift_scene(const ToricDomain& X, const std::vector<PolyPath>& paths) {
  Scene scene;
  scene.title = "path lifting in " + X.describe();
  scene.outlines.push_back({"image", "moment image", image_outline(X)});
  std::optional<ShapeRegion> shape;
  try {
    shape.emplace(X);
  } catch (const DomainError&) {
  }
  if (shape) {
    AffineForm form = knot_form(*shape);
    Region sh = shape_region_reduced(*shape);
    scene.regions.push_back({"shape", "shape invariant, r <= s", sh});
    scene.regions.push_back({"flexible", "flexible region", sh.intersect(form_lt(form.alpha, form.beta, form.bound))});
    scene.lines.push_back({"knot", "obstructing line", form});
  } else {
    scene.regions.push_back({"reduced", "reduced image", moment_region(X, kOpenReducedPositive)});
  }
  add_diagonal(scene);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    scene.paths.push_back({"path", paths.size() == 1 ? "path" : "path " + std::to_string(i + 1), paths[i]});
  }
  fit(scene);
  return scene;
}

Scene knotted_scene(const ShapeRegion& X, const std::vector<Point>& marks) {
  Scene scene;
  scene.title = "knotted tori in " + X.domain().describe();
  scene.outlines.push_back({"image", "moment image", image_outline(X.domain())});
  scene.regions.push_back({"shape", "shape invariant, r <= s", shape_region_reduced(X)});
  scene.regions.push_back({"knotted", "knotted tori", knotted_region(X)});
  scene.lines.push_back({"knot", "knotting line", knot_form(X)});
  add_diagonal(scene);
  scene.marks = marks;
  fit(scene);
  return scene;
}

Scene obstruct_scene(const ObstructionInstance& inst, const std::optional<Witness>& w) {
  Scene scene;
  scene.title = inst.source().describe() + " into " + inst.target().describe();
  scene.outlines.push_back({"image", "source image", image_outline(inst.source())});
  scene.outlines.push_back({"target", "target image", triangle(inst.a(), inst.b())});
  Rational k1 = Rational(BigInt(inst.k() + 1));
  scene.regions.push_back(
      {"excluded", "excluded ellipsoid", Region::of({form_ge(1, 0, 0), form_ge(0, 1, 0), form_lt(k1, 1, inst.b())})});
  scene.lines.push_back({"boundary", "excluded boundary", AffineForm{k1, 1, inst.b()}});
  add_diagonal(scene);
  if (w) {
    scene.outlines.push_back({"witness", "inner ellipsoid", triangle(w->e_r, w->e_s)});
    scene.paths.push_back({"path", "witness path", w->path});
  }
  fit(scene);
  return scene;
}

}  // namespace shapelift::svg
