#include <gtest/gtest.h>

#include <cmath>

#include "geocover/constructions.hpp"
#include "geocover/geom.hpp"
#include "support.hpp"

using namespace geocover;
using geocover::testing::Rng;

TEST(Orientation, SignOfTurn) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 0}), 0);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(Orientation, AntisymmetricInLastTwoArguments) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto p = geocover::testing::random_points(rng, 3, 10.0);
    const int a = orientation(p[0], p[1], p[2]);
    if (a != 0) {
      EXPECT_EQ(orientation(p[0], p[2], p[1]), -a);
    }
  }
}

TEST(CircleIntersections, Disjoint) { EXPECT_TRUE(circle_circle_intersections({0, 0}, {3, 0}, 1.0).empty()); }

TEST(CircleIntersections, Tangent) {
  const auto pts = circle_circle_intersections({0, 0}, {2, 0}, 1.0);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(pts[0].x, 1.0, 1e-12);
  EXPECT_NEAR(pts[0].y, 0.0, 1e-12);
}

TEST(CircleIntersections, TwoPointsSolveBothCircleEquations) {
  const auto pts = circle_circle_intersections({0, 0}, {1, 0}, 1.0);
  ASSERT_EQ(pts.size(), 2u);
  // x^2 + y^2 = 1 and (x-1)^2 + y^2 = 1 give x = 1/2, y = -+sqrt(3/4)
  EXPECT_NEAR(pts[0].x, 0.5, 1e-12);
  EXPECT_NEAR(pts[0].y, -std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(pts[1].y, std::sqrt(0.75), 1e-12);
  for (const auto& p : pts) {
    EXPECT_LT(std::abs(p.x * p.x + p.y * p.y - 1.0), 1e-12);
    EXPECT_LT(std::abs((p.x - 1) * (p.x - 1) + p.y * p.y - 1.0), 1e-12);
  }
}

TEST(CircleIntersections, CoincidentCentersGiveNothing) {
  EXPECT_TRUE(circle_circle_intersections({1, 1}, {1, 1}, 1.0).empty());
}

TEST(SegmentIntersection, Examples) {
  auto p = segment_intersection({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->x, 1.0, 1e-12);
  EXPECT_NEAR(p->y, 1.0, 1e-12);
  EXPECT_FALSE(segment_intersection({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));
  p = segment_intersection({{0, 0}, {2, 0}}, {{1, -1}, {1, 3}});
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->x, 1.0, 1e-12);
  EXPECT_NEAR(p->y, 0.0, 1e-12);
}

TEST(SegmentIntersection, CollinearOverlapIsAnError) {
  try {
    (void)segment_intersection({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
    FAIL() << "expected DegenerateOverlap";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateOverlap);
  }
}

TEST(Contains, ClosedDisk) {
  const Shape d = Shape::disk(1.0);
  EXPECT_TRUE(contains(d, {0, 0}, {1, 0}));
  EXPECT_FALSE(contains(d, {0, 0}, {1.1, 0}));
}

TEST(Contains, SquareAndHole) {
  const Shape sq = Shape::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_TRUE(contains(sq, {0, 0}, {0.5, 0.5}));
  EXPECT_TRUE(contains(sq, {0, 0}, {1.0, 0.3}));
  EXPECT_FALSE(contains(sq, {0, 0}, {1.2, 0.3}));
  const Shape frame = Shape::polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{1, 1}, {1, 3}, {3, 3}, {3, 1}}});
  EXPECT_EQ(frame.kind, ShapeKind::SimplePolygon);
  EXPECT_FALSE(contains(frame, {0, 0}, {2, 2}));
  EXPECT_TRUE(contains(frame, {0, 0}, {0.5, 2}));
  EXPECT_TRUE(contains(frame, {0, 0}, {1, 2}));  // hole boundary belongs to the shape
}

TEST(PointInversion, CenteredDiskIsUnchanged) {
  const Shape d = Shape::disk(1.0);
  const Shape inv = point_inversion(d);
  EXPECT_EQ(inv.radius, 1.0);
  EXPECT_EQ(inv.center, (Point{0, 0}));
}

TEST(PointInversion, UnitSquare) {
  const Shape inv = point_inversion(Shape::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  std::vector<Point> got = inv.outer;
  std::sort(got.begin(), got.end());
  const std::vector<Point> want{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}};
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(got[i].x, want[i].x, 1e-12);
    EXPECT_NEAR(got[i].y, want[i].y, 1e-12);
  }
  EXPECT_GT(signed_area(inv.outer), 0.0);
}

TEST(PointInversion, Involution) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Shape s = i % 2 ? Shape::polygon(geocover::testing::random_star_ring(rng, 3 + i % 9))
                          : Shape::disk(geocover::testing::uniform(rng, 0.1, 3.0),
                                        {geocover::testing::uniform(rng, -1, 1), 0.0}, {0.3, -0.2});
    const Shape back = point_inversion(point_inversion(s));
    EXPECT_NEAR(distance(back.center, s.center), 0.0, 1e-9);
    ASSERT_EQ(back.outer.size(), s.outer.size());
    for (std::size_t k = 0; k < s.outer.size(); ++k) EXPECT_NEAR(distance(back.outer[k], s.outer[k]), 0.0, 1e-9);
  }
}

TEST(PointInversion, ContainmentDuality) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Shape s = Shape::polygon(geocover::testing::random_star_ring(rng, 3 + i % 10));
    const Shape inv = point_inversion(s);
    for (int k = 0; k < 50; ++k) {
      const Point a{geocover::testing::uniform(rng, -2, 2), geocover::testing::uniform(rng, -2, 2)};
      const Point b{geocover::testing::uniform(rng, -2, 2), geocover::testing::uniform(rng, -2, 2)};
      EXPECT_EQ(contains(s, b, a), contains(inv, a, b));
    }
  }
}

TEST(ConvexTranslates, BoundariesCrossAtMostTwice) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Shape s = Shape::polygon(geocover::testing::random_convex_ring(rng, 3 + i % 10));
    const Point d{geocover::testing::uniform(rng, -1.5, 1.5), geocover::testing::uniform(rng, -1.5, 1.5)};
    EXPECT_LE(count_boundary_crossings(s, translated(s, s.reference + d)), 2u);
  }
}

TEST(ShapeValidation, Rejections) {
  EXPECT_THROW(Shape::disk(0.0), Error);
  EXPECT_THROW(Shape::polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), Error);  // bow tie
  EXPECT_THROW(Shape::polygon({{0, 0}, {1, 0}}), Error);
  EXPECT_THROW(Shape::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{2, 2}, {3, 2}, {3, 3}}}), Error);
  try {
    (void)Shape::convex_polygon({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}});
    FAIL() << "expected NotConvex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConvex);
  }
}

TEST(ShapeValidation, ClockwiseOuterIsReoriented) {
  const Shape s = Shape::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_GT(signed_area(s.outer), 0.0);
  EXPECT_EQ(s.kind, ShapeKind::ConvexPolygon);
  EXPECT_EQ(s.reference, (Point{0, 0}));
}

TEST(Tolerance, Validation) {
  EXPECT_NO_THROW(Tolerance{}.validate(1.0));
  EXPECT_THROW((Tolerance{1e-6, 1e-7}.validate(1.0)), Error);
  EXPECT_THROW(Tolerance{}.validate(1e-8), Error);
}
