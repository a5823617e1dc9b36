#include <gtest/gtest.h>

#include "geocover/io.hpp"
#include "geocover/svg.hpp"
#include "support.hpp"

using namespace geocover;
using geocover::testing::Rng;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string parse_message(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return {};
}

}  // namespace

TEST(PointsJson, Parses) {
  EXPECT_EQ(parse_points_json(R"({"points": [[0, 0], [1.5, -2]]})"), (std::vector<Point>{{0, 0}, {1.5, -2}}));
  EXPECT_TRUE(parse_points_json(R"({"points": []})").empty());
}

TEST(PointsJson, ErrorsCarryLineAndColumn) {
  const std::string msg = parse_message([] { (void)parse_points_json("{\"points\": [[0, 0],\n  [1, ]]}", "p.json"); });
  EXPECT_NE(msg.find("p.json:2:"), std::string::npos) << msg;
  EXPECT_NE(parse_message([] { (void)parse_points_json(R"({"pts": []})"); }).find("1:1"), std::string::npos);
  EXPECT_NE(parse_message([] { (void)parse_points_json(R"({"points": [[0]]})"); }).find("points"),
            std::string::npos);
}

TEST(PointsCsv, HeaderCommentsAndBlankLines) {
  const std::string text = "x,y\n# comment\n0,0\n\n 1.5 , -2\r\n3e-1,4\n";
  EXPECT_EQ(parse_points_csv(text), (std::vector<Point>{{0, 0}, {1.5, -2}, {0.3, 4}}));
}

TEST(PointsCsv, BadLineReportsPosition) {
  const std::string msg = parse_message([] { (void)parse_points_csv("0,0\n1,1\n2;2\n", "p.csv"); });
  EXPECT_NE(msg.find("p.csv:3:2"), std::string::npos) << msg;
  EXPECT_NE(parse_message([] { (void)parse_points_csv("0,0\n1,2,3\n"); }).find(":2:"), std::string::npos);
}

TEST(ShapeJson, Disk) {
  const auto spec = parse_shape_json(R"({"type": "disk", "radius": 2})");
  EXPECT_TRUE(spec.shape.is_disk());
  EXPECT_EQ(spec.shape.radius, 2.0);
  EXPECT_FALSE(spec.transform);
}

TEST(ShapeJson, Ellipse) {
  const auto spec = parse_shape_json(R"({"type": "disk", "radius": 1, "transform": [[2, 0], [0, 1]]})");
  ASSERT_TRUE(spec.transform);
  EXPECT_EQ(spec.transform->linear[0][0], 2.0);
  const std::string msg =
      parse_message([] { (void)parse_shape_json(R"({"type": "disk", "radius": 1, "transform": [[1, 2], [2, 4]]})"); });
  EXPECT_NE(msg.find("invertible"), std::string::npos);
}

TEST(ShapeJson, PolygonKinds) {
  auto spec = parse_shape_json(R"({"type": "polygon", "outer": [[0,0],[1,0],[1,1],[0,1]]})");
  EXPECT_EQ(spec.shape.kind, ShapeKind::ConvexPolygon);
  spec = parse_shape_json(R"({"type": "polygon", "outer": [[0,0],[1,0],[1,0.5],[0.5,0.5],[0.5,1],[0,1]]})");
  EXPECT_EQ(spec.shape.kind, ShapeKind::SimplePolygon);
  spec = parse_shape_json(
      R"({"type": "polygon", "outer": [[0,0],[4,0],[4,4],[0,4]], "holes": [[[1,1],[3,1],[3,3],[1,3]]], "reference": [2, 2]})");
  EXPECT_EQ(spec.shape.holes.size(), 1u);
  EXPECT_EQ(spec.shape.reference, (Point{2, 2}));
}

TEST(ShapeJson, MalformedInputIsAParseError) {
  (void)parse_message([] { (void)parse_shape_json(R"({"type": "disk", "radius": )"); });
  (void)parse_message([] { (void)parse_shape_json(R"({"type": "triangle"})"); });
  (void)parse_message([] { (void)parse_shape_json(R"({"type": "disk", "radius": -1})"); });
  const std::string msg =
      parse_message([] { (void)parse_shape_json("{\"type\": \"polygon\",\n \"outer\": [[0,0],[1,1],[1,0],[0,1]]}"); });
  EXPECT_NE(msg.find(":2:"), std::string::npos) << msg;
}

TEST(ResultJson, RoundTripRevalidates) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto pts = geocover::testing::random_points(rng, geocover::testing::pick(rng, 1, 25), 5.0);
    const bool disk = t % 2 == 0;
    const ShapeSpec spec{disk ? Shape::disk(geocover::testing::uniform(rng, 0.4, 1.4))
                              : Shape::polygon(geocover::testing::random_star_ring(rng, 3 + t % 7)),
                         std::nullopt};
    DiscretizeOptions opt;
    opt.solver = Solver::Greedy;
    const auto res = discretize(pts, spec, opt);
    const auto back = translates_from_json(dump_result(res));
    ASSERT_EQ(back.size(), res.translates.size());
    EXPECT_TRUE(geocover::testing::witnesses_valid(spec.shape, pts, back)) << "instance " << t;
  }
}

TEST(ResultJson, Layout) {
  DiscretizeOptions opt;
  opt.solver = Solver::Greedy;
  const auto res = discretize({{0, 0}, {1, 0}}, ShapeSpec{Shape::disk(1.0), std::nullopt}, opt);
  const auto j = to_json(res);
  ASSERT_EQ(j["translates"].size(), 1u);
  EXPECT_EQ(j["translates"][0]["covered"], Json::parse("[0, 1]"));
  EXPECT_EQ(j["stats"]["n"], 2);
  EXPECT_EQ(j["stats"]["k"], 1);
  EXPECT_EQ(j["stats"]["perturbation_applied"], false);
  EXPECT_EQ(j["solution"]["cardinality"], 1);
  EXPECT_EQ(j["solution"]["solver"], "greedy");
  EXPECT_EQ(j["perturbation"]["applied"], false);
}

TEST(Svg, LensHasTwoInversesAndOneStar) {
  const std::vector<Point> pts{{0, 0}, {1, 0}};
  const ShapeSpec spec{Shape::disk(1.0), std::nullopt};
  const auto res = discretize(pts, spec);
  const std::string svg = emit_svg(res, pts, spec);
  EXPECT_EQ(count_of(svg, "class=\"inverse\""), 2u);
  EXPECT_EQ(count_of(svg, "class=\"star\""), 1u);
  EXPECT_EQ(count_of(svg, "class=\"point\""), 2u);
  EXPECT_EQ(svg, emit_svg(discretize(pts, spec), pts, spec));
}

TEST(Svg, SinglePointWithoutTranslates) {
  const std::vector<Point> pts{{0.5, 0.5}};
  const ShapeSpec spec{Shape::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), std::nullopt};
  const std::string svg = emit_svg(DiscretizeResult{}, pts, spec);
  EXPECT_EQ(count_of(svg, "class=\"point\""), 1u);
  EXPECT_EQ(count_of(svg, "class=\"star\""), 0u);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count_of(svg, "<svg "), 1u);
  EXPECT_EQ(count_of(svg, "</svg>"), 1u);
  EXPECT_EQ(count_of(svg, "<g "), count_of(svg, "</g>"));
}

TEST(Pipeline, DuplicatesAreExpandedAndEllipsesMapForward) {
  auto res = discretize({{0, 0}, {1, 0}, {0, 0}}, ShapeSpec{Shape::disk(1.0), std::nullopt});
  ASSERT_EQ(res.translates.size(), 1u);
  EXPECT_EQ(res.translates[0].covered, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(res.stats.duplicates, 1u);

  AffineTransform t;
  t.linear = {{{3, 0}, {0, 1}}};
  const std::vector<Point> pts{{0, 0}, {5, 0}, {0, 3}};
  res = discretize(pts, ShapeSpec{Shape::disk(1.0), t});
  for (const auto& tr : res.translates)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point d = pts[i] - tr.reference;
      const bool inside = d.x * d.x / 9 + d.y * d.y <= 1 + 1e-9;
      const bool listed = std::binary_search(tr.covered.begin(), tr.covered.end(), i);
      EXPECT_EQ(inside, listed);
    }
  EXPECT_EQ(geocover::testing::family(res.translates), (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
}
