#include <gtest/gtest.h>

#include <regex>

#include "shapelift/json_io.hpp"
#include "shapelift/svg.hpp"
#include "support.hpp"

using namespace shapelift;
using namespace testing_support;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Svg, KnottedBallHasOneElementPerRegion) {
  svg::Scene scene = svg::knotted_scene(ShapeRegion(ToricDomain::ball(3)), {P("9/10", "3/2")});
  std::string text = svg::render(scene);
  EXPECT_EQ(count(text, "class=\"region\""), scene.regions.size());
  EXPECT_EQ(count(text, "<polygon class=\"region\" data-tag=\"knotted\""), 1u);
  EXPECT_EQ(count(text, "class=\"mark\""), 1u);
  EXPECT_EQ(text.rfind("</svg>\n"), text.size() - 7);
}

TEST(Svg, KnottedRegionMatchesPredicate) {
  for (const ToricDomain& X : {ToricDomain::ball(3), ToricDomain::ellipsoid(1, 3), ToricDomain::polydisk(1, 2)}) {
    ShapeRegion S(X);
    Region reg = svg::knotted_region(S);
    std::mt19937_64 rng(71);
    for (int i = 0; i < 400; ++i) {
      Point p = random_point(rng, 0, 4, 20);
      if (p.r.sign() <= 0 || p.s < p.r) continue;
      EXPECT_EQ(reg.contains(p), knotted_member(S, p)) << X.describe() << " " << p;
    }
  }
}

TEST(Svg, ObstructionScene) {
  ObstructionInstance inst(ToricDomain::toric_pl({P("0", "24"), P("2", "17"), P("19", "0")}), ToricDomain::ball(20));
  Witness w{16, 16, path_of({{"7", "8"}, {"5/2", "16"}, {"2", "84/5"}, {"1/2", "22"}})};
  std::string text = svg::render(svg::obstruct_scene(inst, w));
  EXPECT_EQ(count(text, "data-tag=\"witness\""), 1u);
  EXPECT_EQ(count(text, "data-tag=\"image\""), 1u);
  EXPECT_EQ(count(text, "<line class=\"line\" data-tag=\"boundary\""), 1u);
  EXPECT_NE(text.find("<polyline class=\"path\" data-tag=\"path\" fill=\"none\" stroke=\"#d62728\""), std::string::npos);
  EXPECT_NE(text.find("marker-end=\"url(#arrow-path)\""), std::string::npos);
}

TEST(Svg, RegionsOnlyWithoutPaths) {
  std::string text = svg::render(svg::lift_scene(ToricDomain::ellipsoid(1, 3), {}));
  EXPECT_EQ(count(text, "class=\"path\""), 0u);
  EXPECT_EQ(count(text, "<defs>"), 0u);
  EXPECT_GE(count(text, "class=\"region\""), 2u);
}

TEST(Svg, Deterministic) {
  auto make = [] {
    return svg::render(svg::lift_scene(ToricDomain::toric_pl({P("0", "24"), P("2", "17"), P("19", "0")}),
                                       {path_of({{"1", "2"}, {"1", "10"}})}));
  };
  EXPECT_EQ(make(), make());
  std::regex coord("\"-?[0-9]+\\.[0-9]{3}\"");
  EXPECT_TRUE(std::regex_search(make(), coord));
}

TEST(Svg, ClippedLine) {
  auto seg = svg::clipped_line(AffineForm{2, 1, 3}, 4, 4);
  ASSERT_TRUE(seg.has_value());
  EXPECT_EQ(seg->first, P("0", "3"));
  EXPECT_EQ(seg->second, P("3/2", "0"));
  EXPECT_FALSE(svg::clipped_line(AffineForm{1, 1, 100}, 4, 4).has_value());
}

TEST(Svg, ClippedCellsStayInBox) {
  Region r = Region::of({form_lt(1, 1, 10)});
  auto cells = svg::clipped_cells(r, 4, 4);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(shoelace_area(cells[0]), Rational(16));
}

TEST(Svg, UnwritableFileIsAnInputError) {
  EXPECT_THROW(svg::write(svg::lift_scene(ToricDomain::ball(3), {}), "/nonexistent-dir/x.svg"), io::InputError);
}
