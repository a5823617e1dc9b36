#pragma once

// Canonical translates of polygon prototypes. Convex inverses are split into
// a lower and an upper x-monotone chain and swept like semicircles; general
// polygons (holes allowed) are swept as a plain segment arrangement, after
// which sink faces dominated by another sink set are discarded.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_map>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"
#include "geocover/inverse.hpp"
#include "geocover/sweep.hpp"
#include "geocover/translate.hpp"

namespace geocover {

/// Rotation that keeps every prototype edge away from vertical.
struct RotationFrame {
  double angle = 0.0;

  Point to_sweep(Point p) const { return rotate(p, angle); }
  Point to_original(Point p) const { return rotate(p, -angle); }

  /// Smallest angle between a rotated edge of `shape` and the vertical axis.
  static double vertical_clearance(const Shape& shape, double angle) {
    double best = std::numbers::pi / 2;
    for (const auto& e : shape.edges()) {
      const Point d = rotate(e.b - e.a, angle);
      best = std::min(best, std::abs(std::atan2(std::abs(d.x), std::abs(d.y))));
    }
    return best;
  }
};

/// Picks the midpoint of the widest gap between edge directions (mod pi) and
/// turns it to vertical.
inline RotationFrame make_rotation_frame(const Shape& shape) {
  RotationFrame f;
  if (shape.is_disk()) return f;
  std::vector<double> dirs;
  for (const auto& e : shape.edges()) {
    double a = std::atan2(e.b.y - e.a.y, e.b.x - e.a.x);
    a = std::fmod(a + std::numbers::pi, std::numbers::pi);
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    dirs.push_back(a);
  }
  std::sort(dirs.begin(), dirs.end());
  double gap = dirs.front() + std::numbers::pi - dirs.back();
  double mid = dirs.back() + 0.5 * gap;
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    if (dirs[i] - dirs[i - 1] > gap) {
      gap = dirs[i] - dirs[i - 1];
      mid = 0.5 * (dirs[i] + dirs[i - 1]);
    }
  }
  f.angle = std::numbers::pi / 2 - mid;
  return f;
}

/// x-monotone polyline, vertices in increasing x.
struct Chain {
  std::vector<Point> v;

  double x_min() const { return v.front().x; }
  double x_max() const { return v.back().x; }

  /// Index of the segment covering x (clamped).
  std::size_t segment_at(double x) const {
    auto it = std::upper_bound(v.begin(), v.end(), x, [](double t, const Point& p) { return t < p.x; });
    std::size_t i = it == v.begin() ? 0 : static_cast<std::size_t>(it - v.begin()) - 1;
    return std::min(i, v.size() - 2);
  }

  double y_at(double x) const {
    const std::size_t i = segment_at(x);
    const Point& a = v[i];
    const Point& b = v[i + 1];
    const double t = std::clamp((x - a.x) / (b.x - a.x), 0.0, 1.0);
    return a.y + t * (b.y - a.y);
  }

  Segment segment(std::size_t i) const { return {v[i], v[i + 1]}; }
};

/// Earliest crossing of two chains strictly after (x, y) in sweep order.
/// Walks the segments of both chains that overlap in x, left to right.
inline std::optional<Point> neighbor_chain_intersection(const Chain& a, const Chain& b, double x, double y,
                                                        const Tolerance& tol = {}) {
  const double lo = std::max({x, a.x_min(), b.x_min()});
  const double hi = std::min(a.x_max(), b.x_max());
  if (lo > hi) return std::nullopt;
  std::size_t i = a.segment_at(lo), j = b.segment_at(lo);
  while (i + 1 < a.v.size() && j + 1 < b.v.size()) {
    if (auto p = segment_intersection(a.segment(i), b.segment(j), tol); p && after(*p, x, y)) return p;
    const double ea = a.v[i + 1].x, eb = b.v[j + 1].x;
    if (std::min(ea, eb) >= hi) break;
    if (ea <= eb) ++i;
    if (eb <= ea) ++j;
  }
  return std::nullopt;
}

/// Curve 2i is the lower chain (interior above) and 2i+1 the upper chain of
/// convex polygon i.
class ChainFamily {
 public:
  ChainFamily(const std::vector<Shape>& placed, const Tolerance& tol = {}) : tol_(tol) {
    chains_.reserve(2 * placed.size());
    for (const auto& s : placed) {
      const Ring& r = s.outer;
      const std::size_t m = r.size();
      std::size_t left = 0, right = 0;
      for (std::size_t k = 1; k < m; ++k) {
        if (r[k] < r[left]) left = k;
        if (r[right] < r[k]) right = k;
      }
      Chain lower, upper;
      for (std::size_t k = left;; k = (k + 1) % m) {
        lower.v.push_back(r[k]);
        if (k == right) break;
      }
      for (std::size_t k = left;; k = (k + m - 1) % m) {
        upper.v.push_back(r[k]);
        if (k == right) break;
      }
      chains_.push_back(std::move(lower));
      chains_.push_back(std::move(upper));
    }
  }

  std::size_t curve_count() const { return chains_.size(); }
  std::size_t point_count() const { return chains_.size() / 2; }
  std::size_t owner(std::size_t c) const { return c / 2; }
  bool interior_above(std::size_t c) const { return (c & 1U) == 0; }
  double y_at(std::size_t c, double x) const { return chains_[c].y_at(x); }
  const Chain& chain(std::size_t c) const { return chains_[c]; }

  std::optional<Point> next_crossing(std::size_t a, std::size_t b, double x, double y) const {
    if (owner(a) == owner(b)) return std::nullopt;
    return neighbor_chain_intersection(chains_[a], chains_[b], x, y, tol_);
  }

  void sample(std::size_t c, double x0, double x1, std::vector<Point>& out) const {
    const Chain& ch = chains_[c];
    out.push_back({x0, ch.y_at(x0)});
    for (const auto& p : ch.v)
      if (p.x > x0 && p.x < x1) out.push_back(p);
    out.push_back({x1, ch.y_at(x1)});
  }

  std::vector<VertexEvent> vertex_events() const {
    std::vector<VertexEvent> out;
    for (std::size_t i = 0; i < point_count(); ++i) {
      VertexEvent l;
      l.at = chains_[2 * i].v.front();
      l.kind = VertexKind::Leftmost;
      l.starting = {2 * i, 2 * i + 1};
      VertexEvent r;
      r.at = chains_[2 * i].v.back();
      r.kind = VertexKind::Rightmost;
      r.ending = {2 * i, 2 * i + 1};
      out.push_back(l);
      out.push_back(r);
    }
    return out;
  }

 private:
  std::vector<Chain> chains_;
  Tolerance tol_;
};

/// Every boundary edge of every placed polygon is one curve.
class SegmentFamily {
 public:
  SegmentFamily(const std::vector<Shape>& placed, const Tolerance& tol = {}) : n_(placed.size()), tol_(tol) {
    for (std::size_t i = 0; i < placed.size(); ++i) {
      std::vector<const Ring*> rings{&placed[i].outer};
      for (const auto& h : placed[i].holes) rings.push_back(&h);
      for (const Ring* ring : rings) add_ring(i, *ring);
    }
  }

  std::size_t curve_count() const { return segs_.size(); }
  std::size_t point_count() const { return n_; }
  std::size_t owner(std::size_t c) const { return owner_[c]; }
  /// Rings are oriented with the interior on the left, so an edge running
  /// left to right has the interior above it.
  bool interior_above(std::size_t c) const { return above_[c]; }
  const Segment& segment(std::size_t c) const { return segs_[c]; }

  double y_at(std::size_t c, double x) const {
    const Segment& s = segs_[c];
    const double t = std::clamp((x - s.a.x) / (s.b.x - s.a.x), 0.0, 1.0);
    return s.a.y + t * (s.b.y - s.a.y);
  }

  std::optional<Point> next_crossing(std::size_t a, std::size_t b, double x, double y) const {
    if (owner_[a] == owner_[b]) return std::nullopt;
    auto p = segment_intersection(segs_[a], segs_[b], tol_);
    if (p && after(*p, x, y)) return p;
    return std::nullopt;
  }

  void sample(std::size_t c, double x0, double x1, std::vector<Point>& out) const {
    out.push_back({x0, y_at(c, x0)});
    out.push_back({x1, y_at(c, x1)});
  }

  std::vector<VertexEvent> vertex_events() const { return events_; }

 private:
  void add_ring(std::size_t owner, const Ring& ring) {
    const std::size_t m = ring.size();
    const std::size_t base = segs_.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Point a = ring[k], b = ring[(k + 1) % m];
      if (a.x == b.x) throw Error(ErrorCode::InvalidPolygon, "vertical edge in the sweep frame");
      segs_.push_back(a.x < b.x ? Segment{a, b} : Segment{b, a});
      above_.push_back(a.x < b.x);
      owner_.push_back(owner);
    }
    auto slope = [&](std::size_t c) {
      const Segment& s = segs_[c];
      return (s.b.y - s.a.y) / (s.b.x - s.a.x);
    };
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t in = base + (k + m - 1) % m, out = base + k;
      const Point v = ring[k];
      const bool in_right = segs_[in].b.x > v.x || segs_[in].a.x > v.x;
      const bool out_right = segs_[out].b.x > v.x || segs_[out].a.x > v.x;
      VertexEvent ev;
      ev.at = v;
      if (in_right && out_right) {
        ev.kind = VertexKind::Leftmost;
        ev.starting = slope(in) < slope(out) ? std::array{in, out} : std::array{out, in};
      } else if (!in_right && !out_right) {
        ev.kind = VertexKind::Rightmost;
        ev.ending = slope(in) > slope(out) ? std::array{in, out} : std::array{out, in};
      } else {
        ev.kind = VertexKind::PassThrough;
        ev.ending[0] = in_right ? out : in;
        ev.starting[0] = in_right ? in : out;
      }
      events_.push_back(ev);
    }
  }

  std::size_t n_;
  Tolerance tol_;
  std::vector<Segment> segs_;
  std::vector<bool> above_;
  std::vector<std::size_t> owner_;
  std::vector<VertexEvent> events_;
};

struct PolygonReport {
  std::vector<CanonicalTranslate> translates;
  IntersectionStats stats;
  RotationFrame frame;
  std::size_t events = 0;
  std::size_t intersections = 0;
  std::size_t regions_created = 0;
  std::size_t distinct_region_sets = 0;
  /// sink faces before grouping by covered set
  std::size_t sink_faces = 0;
  /// distinct covered sets among the sink faces
  std::size_t sink_sets = 0;
  /// sink sets removed because another sink set strictly contains them
  std::size_t dominated = 0;
};

namespace detail {

/// Inverses placed at the rotated points, in the sweep frame.
inline std::vector<Shape> placed_inverses(const std::vector<Point>& points, const Shape& prototype,
                                          const RotationFrame& frame) {
  const Shape rotated_proto = rotated(prototype, frame.angle);
  const Shape inv = point_inversion(rotated_proto);
  std::vector<Shape> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(translated(inv, frame.to_sweep(p)));
  return out;
}

inline void fill_sweep_stats(PolygonReport& rep, const SweepResult& res) {
  rep.events = res.events;
  rep.intersections = res.intersections;
  rep.regions_created = res.regions_created;
  rep.distinct_region_sets = res.distinct_region_sets;
  rep.sink_faces = res.sink_faces.size();
}

}  // namespace detail

inline PolygonReport report_canonical_convex_polygon(const std::vector<Point>& points, const Shape& prototype,
                                                     const Tolerance& tol = {}) {
  if (prototype.is_disk() || !prototype.holes.empty() || !ring_is_convex(prototype.outer, tol))
    throw Error(ErrorCode::NotConvex, "prototype is not a convex polygon");
  PolygonReport rep;
  rep.frame = make_rotation_frame(prototype);
  const auto placed = detail::placed_inverses(points, prototype, rep.frame);
  ChainFamily family(placed, tol);
  ArrangementSweep sweep(family, WitnessRule::BoundaryCentroid, tol);
  const SweepResult res = sweep.run();
  detail::fill_sweep_stats(rep, res);
  for (const auto& f : res.sink_faces)
    rep.translates.push_back(CanonicalTranslate{rep.frame.to_original(f.witness), f.covered.to_vector()});
  rep.sink_sets = rep.translates.size();
  sort_by_covered(rep.translates);
  rep.stats = intersection_stats(PointInverseSet{placed, {}}, tol);
  return rep;
}

inline PolygonReport report_canonical_simple_polygon(const std::vector<Point>& points, const Shape& prototype,
                                                     const Tolerance& tol = {}) {
  if (prototype.is_disk()) throw Error(ErrorCode::InvalidPolygon, "prototype is not a polygon");
  detail::check_simple(prototype, tol);
  PolygonReport rep;
  rep.frame = make_rotation_frame(prototype);
  const auto placed = detail::placed_inverses(points, prototype, rep.frame);
  SegmentFamily family(placed, tol);
  ArrangementSweep sweep(family, WitnessRule::TrapezoidMidpoint, tol);
  const SweepResult res = sweep.run();
  detail::fill_sweep_stats(rep, res);

  std::unordered_map<IndexSet, Point, IndexSetHash> witness;
  std::vector<IndexSet> sets;
  for (const auto& f : res.sink_faces) {
    if (witness.emplace(f.covered, f.witness).second) sets.push_back(f.covered);
  }
  rep.sink_sets = sets.size();
  const auto kept = maximal_sets(sets);
  rep.dominated = sets.size() - kept.size();
  for (const auto& s : kept)
    rep.translates.push_back(CanonicalTranslate{rep.frame.to_original(witness.at(s)), s.to_vector()});
  sort_by_covered(rep.translates);
  rep.stats = intersection_stats(PointInverseSet{placed, {}}, tol);
  return rep;
}

}  // namespace geocover
