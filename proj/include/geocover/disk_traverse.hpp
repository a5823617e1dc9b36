#pragma once

// Canonical disks by walking the faces of the circle arrangement. The
// arrangement is stored as a DCEL whose half-edges are circle arcs; a face
// walked clockwise (face on the right) is convex exactly when every arc on
// its boundary is traversed clockwise around its own circle.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"
#include "geocover/inverse.hpp"
#include "geocover/neighbors.hpp"
#include "geocover/translate.hpp"

namespace geocover {

enum class Mark { New, Old, Obsolete };

struct DcelVertex {
  Point at;
  std::size_t circles[2];
  /// outgoing half-edges in counter-clockwise order of their tangents
  std::vector<std::size_t> outgoing;
};

struct HalfEdge {
  std::size_t origin = 0;
  std::size_t twin = 0;
  /// next half-edge of the face on the right
  std::size_t next = 0;
  std::size_t circle = 0;
  /// true when the arc runs counter-clockwise around its circle, i.e. the
  /// disk interior is on the left
  bool ccw = false;
  Point arc_mid;
};

struct CircleDCEL {
  std::vector<Point> centers;
  double radius = 0.0;
  std::vector<DcelVertex> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<std::size_t> isolated;
};

namespace detail {

inline double angle_on(Point center, Point p) { return std::atan2(p.y - center.y, p.x - center.x); }

inline double tangent_angle(Point center, Point at, bool ccw) {
  const Point t{-(at.y - center.y), at.x - center.x};
  return ccw ? std::atan2(t.y, t.x) : std::atan2(-t.y, -t.x);
}

}  // namespace detail

inline CircleDCEL build_inversion_graph(const std::vector<Point>& points, double radius,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        const Tolerance& tol = {}) {
  CircleDCEL g;
  g.centers = points;
  g.radius = radius;
  const std::size_t n = points.size();
  std::vector<std::vector<std::pair<double, std::size_t>>> around(n);
  for (const auto& [i, j] : pairs) {
    const auto hits = circle_circle_intersections(points[i], points[j], radius, tol);
    if (hits.size() != 2) throw Error(ErrorCode::DegeneracyUnresolved, "tangent circles in the arrangement");
    for (const Point& p : hits) {
      const std::size_t v = g.vertices.size();
      g.vertices.push_back(DcelVertex{p, {i, j}, {}});
      around[i].emplace_back(detail::angle_on(points[i], p), v);
      around[j].emplace_back(detail::angle_on(points[j], p), v);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    auto& vs = around[c];
    if (vs.empty()) {
      g.isolated.push_back(c);
      continue;
    }
    std::sort(vs.begin(), vs.end());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const auto& [a0, u] = vs[k];
      const auto& [a1_raw, w] = vs[(k + 1) % vs.size()];
      if (distance(g.vertices[u].at, g.vertices[w].at) <= tol.epsilon && u != w)
        throw Error(ErrorCode::DegeneracyUnresolved, "coincident intersection points");
      double a1 = a1_raw;
      if (a1 <= a0) a1 += 2.0 * std::numbers::pi;
      const double am = 0.5 * (a0 + a1);
      const Point mid = points[c] + radius * Point{std::cos(am), std::sin(am)};
      const std::size_t h = g.half_edges.size();
      g.half_edges.push_back(HalfEdge{u, h + 1, 0, c, true, mid});
      g.half_edges.push_back(HalfEdge{w, h, 0, c, false, mid});
      g.vertices[u].outgoing.push_back(h);
      g.vertices[w].outgoing.push_back(h + 1);
    }
  }
  for (auto& v : g.vertices) {
    auto key = [&](std::size_t h) {
      const auto& e = g.half_edges[h];
      return detail::tangent_angle(points[e.circle], v.at, e.ccw);
    };
    std::sort(v.outgoing.begin(), v.outgoing.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  }
  for (auto& e : g.half_edges) {
    const auto& out = g.vertices[g.half_edges[e.twin].origin].outgoing;
    const auto pos = static_cast<std::size_t>(std::find(out.begin(), out.end(), e.twin) - out.begin());
    e.next = out[(pos + 1) % out.size()];
  }
  return g;
}

struct TraverseStats {
  std::size_t walks = 0;
  std::size_t faces_closed = 0;
  std::size_t rejected = 0;
};

namespace detail {

inline bool strictly_inside_all(const CircleDCEL& g, const std::vector<std::size_t>& walk, Point q, double eps) {
  for (auto h : walk)
    if (!(distance(q, g.centers[g.half_edges[h].circle]) < g.radius - eps)) return false;
  return true;
}

inline Point face_reference(const CircleDCEL& g, const std::vector<std::size_t>& walk, double eps) {
  Point sum{};
  for (auto h : walk) sum = sum + g.vertices[g.half_edges[h].origin].at;
  const Point avg = (1.0 / static_cast<double>(walk.size())) * sum;
  if (strictly_inside_all(g, walk, avg, eps)) return avg;
  for (auto h : walk) sum = sum + g.half_edges[h].arc_mid;
  return (1.0 / static_cast<double>(2 * walk.size())) * sum;
}

}  // namespace detail

/// One canonical translate per convex face plus one per isolated circle.
inline std::vector<CanonicalTranslate> traverse_report_canonical(const CircleDCEL& g, TraverseStats* stats = nullptr,
                                                                 const Tolerance& tol = {}) {
  std::vector<CanonicalTranslate> out;
  TraverseStats st;
  PointGrid grid(g.centers, g.radius);
  auto covered_at = [&](Point q) {
    std::vector<std::size_t> cov;
    grid.for_each_near(q, [&](std::size_t i) {
      if (distance(q, g.centers[i]) <= g.radius + tol.epsilon) cov.push_back(i);
    });
    std::sort(cov.begin(), cov.end());
    return cov;
  };
  for (auto c : g.isolated) out.push_back(CanonicalTranslate{g.centers[c], {c}});

  std::vector<Mark> mark(g.half_edges.size(), Mark::New);
  std::vector<std::size_t> walk;
  for (std::size_t start = 0; start < g.half_edges.size(); ++start) {
    if (mark[start] != Mark::New) continue;
    ++st.walks;
    walk.clear();
    std::size_t h = start;
    bool convex = true;
    while (mark[h] == Mark::New) {
      mark[h] = Mark::Old;
      walk.push_back(h);
      if (g.half_edges[h].ccw) {
        convex = false;
        break;
      }
      h = g.half_edges[h].next;
    }
    if (convex && mark[h] == Mark::Old) {
      ++st.faces_closed;
      const Point ref = detail::face_reference(g, walk, tol.epsilon);
      out.push_back(CanonicalTranslate{ref, covered_at(ref)});
    } else {
      ++st.rejected;
    }
    for (auto e : walk) mark[e] = Mark::Obsolete;
  }
  sort_by_covered(out);
  if (stats) *stats = st;
  return out;
}

struct DiskTraverseReport {
  std::vector<CanonicalTranslate> translates;
  IntersectionStats stats;
  std::size_t vertices = 0;
  std::size_t half_edges = 0;
  TraverseStats walk;
};

inline DiskTraverseReport traverse_canonical_disks(const std::vector<Point>& points, double radius,
                                                   const Tolerance& tol = {}) {
  DiskTraverseReport rep;
  const auto pairs = fixed_radius_neighbors(points, radius);
  const CircleDCEL g = build_inversion_graph(points, radius, pairs, tol);
  rep.vertices = g.vertices.size();
  rep.half_edges = g.half_edges.size();
  rep.translates = traverse_report_canonical(g, &rep.walk, tol);
  rep.stats.pairs = pairs;
  rep.stats.k = pairs.size();
  std::vector<bool> touched(points.size(), false);
  for (const auto& [i, j] : pairs) touched[i] = touched[j] = true;
  for (bool t : touched)
    if (!t) ++rep.stats.e0;
  return rep;
}

}  // namespace geocover
