#include <gtest/gtest.h>

#include "geocover/disk_sweep.hpp"
#include "geocover/oracle.hpp"
#include "support.hpp"

using namespace geocover;
using geocover::testing::family;
using geocover::testing::Rng;
using Family = std::vector<std::vector<std::size_t>>;

TEST(DiskSweep, SinglePoint) {
  const auto rep = report_canonical_disks({{0, 0}}, 1.0);
  EXPECT_EQ(family(rep.translates), (Family{{0}}));
}

TEST(DiskSweep, FarApartPair) {
  const auto rep = report_canonical_disks({{0, 0}, {3, 0}}, 1.0);
  EXPECT_EQ(family(rep.translates), (Family{{0}, {1}}));
  EXPECT_EQ(rep.stats.k, 0u);
  EXPECT_EQ(rep.stats.e0, 2u);
}

TEST(DiskSweep, Lens) {
  const auto rep = report_canonical_disks({{0, 0}, {1, 0}}, 1.0);
  EXPECT_EQ(family(rep.translates), (Family{{0, 1}}));
  EXPECT_EQ(rep.stats.k, 1u);
}

TEST(DiskSweep, Chain) {
  const std::vector<Point> pts{{0, 0}, {1.9, 0}, {3.8, 0}};
  const auto rep = report_canonical_disks(pts, 1.0);
  EXPECT_EQ(family(rep.translates), (Family{{0, 1}, {1, 2}}));
  // 2n endpoint events plus two crossings per intersecting pair
  EXPECT_EQ(rep.events, 10u);
}

TEST(DiskSweep, Triangle) {
  const auto rep = report_canonical_disks({{0, 0}, {1, 0}, {0.5, 0.8}}, 1.0);
  EXPECT_EQ(family(rep.translates), (Family{{0, 1, 2}}));
}

TEST(DiskSweep, WitnessesAreInsideTheirDisks) {
  const std::vector<Point> pts{{0, 0}, {1.9, 0}, {3.8, 0}};
  const auto rep = report_canonical_disks(pts, 1.0);
  EXPECT_TRUE(geocover::testing::witnesses_valid(Shape::disk(1.0), pts, rep.translates));
}

TEST(ConvexityUpdate, SameSideArcsCloseTheMiddle) {
  for (auto side : {ArcSide::Upper, ArcSide::Lower}) {
    const auto f = convexity_update(side, side, {true, true, true});
    EXPECT_FALSE(f.middle);
    EXPECT_TRUE(f.below);
    EXPECT_TRUE(f.above);
  }
}

TEST(ConvexityUpdate, OppositeArcs) {
  auto f = convexity_update(ArcSide::Upper, ArcSide::Lower, {true, false, true});
  EXPECT_TRUE(f.middle);
  EXPECT_FALSE(f.below);
  EXPECT_FALSE(f.above);
  f = convexity_update(ArcSide::Upper, ArcSide::Lower, {false, true, false});
  EXPECT_FALSE(f.middle);
  f = convexity_update(ArcSide::Lower, ArcSide::Upper, {true, false, true});
  EXPECT_FALSE(f.middle);
}

namespace {

struct RandomDisks {
  std::vector<Point> pts;
  double r;
};

RandomDisks random_disks(Rng& rng, std::size_t n) {
  RandomDisks d;
  d.pts = geocover::testing::random_points(rng, n, 6.0);
  d.r = geocover::testing::uniform(rng, 0.4, 1.6);
  return d;
}

}  // namespace

TEST(DiskSweep, MatchesOracleOnRandomInstances) {
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    const auto d = random_disks(rng, geocover::testing::pick(rng, 2, 25));
    const auto rep = report_canonical_disks(d.pts, d.r);
    EXPECT_EQ(family(rep.translates), family(oracle_canonical_disks(d.pts, d.r))) << "instance " << t;
  }
}

TEST(DiskSweep, StructuralPropertiesOnRandomInstances) {
  Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    const auto d = random_disks(rng, geocover::testing::pick(rng, 1, 40));
    const auto rep = report_canonical_disks(d.pts, d.r);
    const std::size_t n = d.pts.size();
    EXPECT_TRUE(geocover::testing::is_antichain(rep.translates, n));
    EXPECT_TRUE(geocover::testing::covers_all(rep.translates, n));
    EXPECT_TRUE(geocover::testing::witnesses_valid(Shape::disk(d.r), d.pts, rep.translates));
    EXPECT_LE(rep.events, 2 * n + 2 * rep.stats.k);
    EXPECT_LE(rep.translates.size(), rep.stats.k + rep.stats.e0);
  }
}
