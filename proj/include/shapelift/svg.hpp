#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shapelift/obstruct.hpp"
#include "shapelift/shape.hpp"

namespace shapelift::svg {

/// Tags pick the colour: image, target, witness, shape, flexible, knotted,
/// excluded, reduced, knot, boundary, diagonal, path.
struct Outline {
  std::string tag;
  std::string label;
  std::vector<Point> vertices;
};

struct TaggedRegion {
  std::string tag;
  std::string label;
  Region region;
};

/// The line alpha r + beta s = bound, clipped to the viewport.
struct Line {
  std::string tag;
  std::string label;
  AffineForm form;
};

struct TaggedPath {
  std::string tag;
  std::string label;
  PolyPath path;
};

struct Scene {
  std::string title;
  Rational width;
  Rational height;
  std::vector<Outline> outlines;
  std::vector<TaggedRegion> regions;
  std::vector<Line> lines;
  std::vector<TaggedPath> paths;
  /// Query points, drawn as dots.
  std::vector<Point> marks;
};

/// Cells of `region` cut down to [0, width] x [0, height]; empty cells dropped.
std::vector<std::vector<Point>> clipped_cells(const Region& region, const Rational& width, const Rational& height);

/// The part of the line inside the viewport, if any.
std::optional<std::pair<Point, Point>> clipped_line(const AffineForm& form, const Rational& width,
                                                    const Rational& height);

std::string render(const Scene& scene);
/// Throws io::InputError when the file cannot be written.
void write(const Scene& scene, const std::string& file);

/// Exact region of knotted_member: open reduced image, r within the strip,
/// knotting form above its bound.
Region knotted_region(const ShapeRegion& X);

Scene lift_scene(const ToricDomain& X, const std::vector<PolyPath>& paths);
Scene knotted_scene(const ShapeRegion& X, const std::vector<Point>& marks);
Scene obstruct_scene(const ObstructionInstance& inst, const std::optional<Witness>& w);

}  // namespace shapelift::svg
