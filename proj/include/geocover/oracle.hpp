#pragma once

// Brute-force ground truth for small instances. Nothing here shares code
// with the sweeps beyond the geometric primitives and `contains`.

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"
#include "geocover/inverse.hpp"
#include "geocover/neighbors.hpp"
#include "geocover/translate.hpp"

namespace geocover {

struct OracleCaps {
  std::size_t disk_points = 30;
  std::size_t polygon_points = 20;
  std::size_t polygon_vertices = 12;
};

struct Candidate {
  IndexSet covered;
  Point witness;
};

/// Covered sets realised by a list of placements, each with one witness.
struct CandidateFamily {
  std::vector<Candidate> sets;
  std::vector<bool> maximal;
};

namespace detail {

/// Largest distance from the reference point to any point of the shape.
inline double reach_of(const Shape& shape) {
  if (shape.is_disk()) return shape.radius + distance(shape.center, shape.reference);
  double r = 0.0;
  for (const auto& v : shape.outer) r = std::max(r, distance(v, shape.reference));
  return r;
}

class Placements {
 public:
  Placements(const std::vector<Point>& points, const Shape& shape, const Tolerance& tol)
      : points_(points), shape_(shape), tol_(tol), grid_(points, reach_of(shape)) {}

  IndexSet covered_at(Point c) const {
    IndexSet s(points_.size());
    grid_.for_each_near(c, [&](std::size_t i) {
      if (contains(shape_, c, points_[i], tol_)) s.insert(i);
    });
    return s;
  }

  void add(Point c) {
    IndexSet s = covered_at(c);
    if (s.empty()) return;
    if (seen_.insert(s).second) family_.sets.push_back(Candidate{std::move(s), c});
  }

  CandidateFamily finish() {
    const std::size_t m = family_.sets.size();
    family_.maximal.assign(m, true);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m && family_.maximal[i]; ++j)
        if (i != j && family_.sets[i].covered.is_proper_subset_of(family_.sets[j].covered))
          family_.maximal[i] = false;
    return std::move(family_);
  }

 private:
  const std::vector<Point>& points_;
  const Shape& shape_;
  Tolerance tol_;
  PointGrid grid_;
  std::unordered_set<IndexSet, IndexSetHash> seen_;
  CandidateFamily family_;
};

inline std::vector<CanonicalTranslate> maximal_entries(const CandidateFamily& f) {
  std::vector<CanonicalTranslate> out;
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    if (f.maximal[i]) out.push_back(CanonicalTranslate{f.sets[i].witness, f.sets[i].covered.to_vector()});
  sort_by_covered(out);
  return out;
}

}  // namespace detail

/// Candidate centers: every point, and both centers of the radius-r circles
/// through each pair at distance <= 2r, moved epsilon toward the pair midpoint.
inline CandidateFamily disk_candidate_family(const std::vector<Point>& points, double radius,
                                             const Tolerance& tol = {}) {
  const Shape disk = Shape::disk(radius);
  detail::Placements acc(points, disk, tol);
  for (const auto& p : points) acc.add(p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Point mid = 0.5 * (points[i] + points[j]);
      for (const Point& c : circle_circle_intersections(points[i], points[j], radius, tol)) {
        const Point d = mid - c;
        const double len = norm(d);
        acc.add(len > 0.0 ? c + (tol.epsilon / len) * d : c);
      }
    }
  }
  return acc.finish();
}

inline std::vector<CanonicalTranslate> oracle_canonical_disks(const std::vector<Point>& points, double radius,
                                                              const Tolerance& tol = {}, const OracleCaps& caps = {}) {
  if (points.size() > caps.disk_points) throw Error(ErrorCode::CapExceeded, "too many points for the disk oracle");
  return detail::maximal_entries(disk_candidate_family(points, radius, tol));
}

/// One sample per cell of the vertical slab decomposition of all inverse
/// boundary segments, in the input frame.
inline CandidateFamily polygon_face_family(const std::vector<Point>& points, const Shape& prototype,
                                           const Tolerance& tol = {}) {
  const PointInverseSet inv = build_inverses(points, prototype);
  std::vector<Segment> segs;
  std::vector<double> xs;
  for (const auto& s : inv.inverses) {
    for (const auto& e : s.edges()) {
      segs.push_back(e);
      xs.push_back(e.a.x);
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double ilo = std::min(segs[i].a.x, segs[i].b.x), ihi = std::max(segs[i].a.x, segs[i].b.x);
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const double jlo = std::min(segs[j].a.x, segs[j].b.x), jhi = std::max(segs[j].a.x, segs[j].b.x);
      if (ihi < jlo || jhi < ilo) continue;
      std::optional<Point> p;
      try {
        p = segment_intersection(segs[i], segs[j], tol);
      } catch (const Error&) {
        continue;  // shared collinear piece: its endpoints are already slab bounds
      }
      if (p) xs.push_back(p->x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  detail::Placements acc(points, prototype, tol);
  std::vector<double> ys;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (!(xs[k + 1] > xs[k])) continue;
    const double xm = 0.5 * (xs[k] + xs[k + 1]);
    ys.clear();
    for (const auto& s : segs) {
      const double lo = std::min(s.a.x, s.b.x), hi = std::max(s.a.x, s.b.x);
      if (!(lo < xm && xm < hi)) continue;
      ys.push_back(s.a.y + (xm - s.a.x) / (s.b.x - s.a.x) * (s.b.y - s.a.y));
    }
    std::sort(ys.begin(), ys.end());
    for (std::size_t t = 0; t + 1 < ys.size(); ++t)
      if (ys[t + 1] > ys[t]) acc.add(Point{xm, 0.5 * (ys[t] + ys[t + 1])});
  }
  return acc.finish();
}

inline std::vector<CanonicalTranslate> oracle_canonical_polygons(const std::vector<Point>& points,
                                                                 const Shape& prototype, const Tolerance& tol = {},
                                                                 const OracleCaps& caps = {}) {
  if (prototype.is_disk()) throw Error(ErrorCode::InvalidShape, "polygon oracle needs a polygon prototype");
  if (points.size() > caps.polygon_points || prototype.vertex_count() > caps.polygon_vertices)
    throw Error(ErrorCode::CapExceeded, "instance exceeds the polygon oracle caps");
  return detail::maximal_entries(polygon_face_family(points, prototype, tol));
}

/// Secondary oracle: covered sets seen on a square grid of reference
/// placements over the bounding box of all inverses.
inline CandidateFamily grid_sampled_family(const std::vector<Point>& points, const Shape& prototype, double step,
                                           const Tolerance& tol = {}) {
  detail::Placements acc(points, prototype, tol);
  if (points.empty()) return acc.finish();
  const PointInverseSet inv = build_inverses(points, prototype);
  Point lo = bounds(inv.inverses.front())[0], hi = bounds(inv.inverses.front())[1];
  for (const auto& s : inv.inverses) {
    const auto b = bounds(s);
    lo = {std::min(lo.x, b[0].x), std::min(lo.y, b[0].y)};
    hi = {std::max(hi.x, b[1].x), std::max(hi.y, b[1].y)};
  }
  const auto nx = static_cast<std::size_t>(std::ceil((hi.x - lo.x) / step));
  const auto ny = static_cast<std::size_t>(std::ceil((hi.y - lo.y) / step));
  for (std::size_t i = 0; i <= nx; ++i)
    for (std::size_t j = 0; j <= ny; ++j)
      acc.add(Point{lo.x + static_cast<double>(i) * step, lo.y + static_cast<double>(j) * step});
  return acc.finish();
}

/// Every distinct nonempty covered set of a disk arrangement: the four
/// sectors around each circle crossing, the circle centers, and a grid.
inline CandidateFamily disk_all_sets_family(const std::vector<Point>& points, double radius, double grid_step,
                                            const Tolerance& tol = {}) {
  const Shape disk = Shape::disk(radius);
  detail::Placements acc(points, disk, tol);
  const double delta = 1e-5 * radius;
  for (const auto& p : points) acc.add(p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (const Point& v : circle_circle_intersections(points[i], points[j], radius, tol)) {
        const Point ri = (1.0 / norm(v - points[i])) * (v - points[i]);
        const Point rj = (1.0 / norm(v - points[j])) * (v - points[j]);
        for (double si : {-1.0, 1.0})
          for (double sj : {-1.0, 1.0}) {
            const Point d = si * ri + sj * rj;
            const double len = norm(d);
            if (len > 0.0) acc.add(v + (delta / len) * d);
          }
      }
    }
  }
  if (grid_step > 0.0 && !points.empty()) {
    Point lo = points.front(), hi = lo;
    for (const auto& p : points) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    lo = lo - Point{radius, radius};
    hi = hi + Point{radius, radius};
    for (double x = lo.x; x <= hi.x; x += grid_step)
      for (double y = lo.y; y <= hi.y; y += grid_step) acc.add(Point{x, y});
  }
  return acc.finish();
}

/// Distinct covered sets of a family, sorted.
inline std::vector<IndexSet> family_sets(const CandidateFamily& f, bool maximal_only) {
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    if (!maximal_only || f.maximal[i]) out.push_back(f.sets[i].covered);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace geocover
