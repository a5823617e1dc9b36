#pragma once

// Plane sweep over radius-r circles centered at P. Each circle is split into
// a lower and an upper semicircle meeting at its leftmost and rightmost
// vertices; the convex faces that survive the sweep are the distinct
// canonical disks.

#include <cmath>
#include <optional>
#include <vector>

#include "geocover/geom.hpp"
#include "geocover/inverse.hpp"
#include "geocover/neighbors.hpp"
#include "geocover/sweep.hpp"
#include "geocover/translate.hpp"

namespace geocover {

/// Curve 2i is the lower and 2i+1 the upper semicircle of circle i.
class SemicircleFamily {
 public:
  SemicircleFamily(const std::vector<Point>& centers, double radius, const Tolerance& tol = {})
      : centers_(centers), r_(radius), tol_(tol) {}

  std::size_t curve_count() const { return 2 * centers_.size(); }
  std::size_t point_count() const { return centers_.size(); }
  std::size_t owner(std::size_t c) const { return c / 2; }
  bool is_upper(std::size_t c) const { return (c & 1U) != 0; }
  /// The disk lies above its lower semicircle.
  bool interior_above(std::size_t c) const { return !is_upper(c); }

  double y_at(std::size_t c, double x) const {
    const Point& o = centers_[owner(c)];
    const double dx = x - o.x;
    const double h = std::sqrt(std::max(0.0, r_ * r_ - dx * dx));
    return is_upper(c) ? o.y + h : o.y - h;
  }

  bool on_curve(std::size_t c, Point p) const {
    const double cy = centers_[owner(c)].y;
    return is_upper(c) ? p.y > cy : p.y < cy;
  }

  std::optional<Point> next_crossing(std::size_t a, std::size_t b, double x, double y) const {
    if (owner(a) == owner(b)) return std::nullopt;
    const auto pts = circle_circle_intersections(centers_[owner(a)], centers_[owner(b)], r_, tol_);
    if (pts.size() != 2) return std::nullopt;  // disjoint or tangent
    for (const auto& p : pts)
      if (on_curve(a, p) && on_curve(b, p) && after(p, x, y)) return p;
    return std::nullopt;
  }

  void sample(std::size_t c, double x0, double x1, std::vector<Point>& out) const {
    const double xm = 0.5 * (x0 + x1);
    out.push_back({x0, y_at(c, x0)});
    out.push_back({xm, y_at(c, xm)});
    out.push_back({x1, y_at(c, x1)});
  }

  std::vector<VertexEvent> vertex_events() const {
    std::vector<VertexEvent> out;
    out.reserve(2 * centers_.size());
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      VertexEvent left;
      left.at = centers_[i] - Point{r_, 0.0};
      left.kind = VertexKind::Leftmost;
      left.starting = {2 * i, 2 * i + 1};
      VertexEvent right;
      right.at = centers_[i] + Point{r_, 0.0};
      right.kind = VertexKind::Rightmost;
      right.ending = {2 * i, 2 * i + 1};
      out.push_back(left);
      out.push_back(right);
    }
    return out;
  }

 private:
  const std::vector<Point>& centers_;
  double r_;
  Tolerance tol_;
};

enum class ArcSide { Upper, Lower };

/// Convexity of the regions around an intersection event.
struct ConvexityFlags {
  bool below = false;
  bool middle = false;
  bool above = false;
};

/// Case table for two semicircles crossing: `lower_arc` bounded the old
/// middle region from below, `upper_arc` from above. `current.middle` is
/// the old middle region; the returned middle is the region that starts.
inline ConvexityFlags convexity_update(ArcSide lower_arc, ArcSide upper_arc, ConvexityFlags current) {
  ConvexityFlags next = current;
  if (lower_arc == upper_arc) {
    next.middle = false;
    return next;
  }
  next.below = false;
  next.above = false;
  // the new region lies inside both disks only when the old one lay outside both
  next.middle = lower_arc == ArcSide::Upper && !current.middle;
  return next;
}

struct DiskSweepReport {
  std::vector<CanonicalTranslate> translates;
  IntersectionStats stats;
  std::size_t events = 0;
  std::size_t regions_created = 0;
  std::size_t distinct_region_sets = 0;
};

/// k and e0 of radius-r disk inverses via the neighbour grid.
inline IntersectionStats disk_intersection_stats(const std::vector<Point>& centers, double radius) {
  IntersectionStats st;
  st.pairs = pairs_within(centers, 2.0 * radius);
  st.k = st.pairs.size();
  std::vector<bool> touched(centers.size(), false);
  for (const auto& [i, j] : st.pairs) touched[i] = touched[j] = true;
  for (bool t : touched)
    if (!t) ++st.e0;
  return st;
}

inline DiskSweepReport report_canonical_disks(const std::vector<Point>& points, double radius,
                                              const Tolerance& tol = {}) {
  SemicircleFamily family(points, radius, tol);
  ArrangementSweep sweep(family, WitnessRule::BoundaryCentroid, tol);
  SweepResult res = sweep.run();
  DiskSweepReport rep;
  for (auto& f : res.sink_faces) rep.translates.push_back(CanonicalTranslate{f.witness, f.covered.to_vector()});
  sort_by_covered(rep.translates);
  rep.stats = disk_intersection_stats(points, radius);
  rep.events = res.events;
  rep.regions_created = res.regions_created;
  rep.distinct_region_sets = res.distinct_region_sets;
  return rep;
}

}  // namespace geocover
