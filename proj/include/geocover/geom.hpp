#pragma once

// Planar primitives shared by every discretization path: points, the
// translatable prototype, orientation/intersection predicates, closed
// containment and point inversion. All comparisons go through one Tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geocover/error.hpp"

namespace geocover {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point, Point) = default;
  friend constexpr auto operator<=>(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Counter-clockwise rotation about the origin.
inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Tolerance {
  double epsilon = 1e-9;
  double perturbation = 1e-7;

  /// Checks epsilon < perturbation < feature_scale.
  void validate(double feature_scale) const {
    if (!(epsilon > 0.0) || !(perturbation > epsilon))
      throw Error(ErrorCode::InvalidShape, "tolerance requires 0 < epsilon < perturbation");
    if (!(perturbation < feature_scale))
      throw Error(ErrorCode::InvalidShape, "perturbation magnitude exceeds the input feature scale");
  }
};

inline int orientation(Point p, Point q, Point r, const Tolerance& tol = {}) {
  const double c = cross(q - p, r - p);
  const double scale = std::max(1.0, norm(q - p));
  if (std::abs(c) <= tol.epsilon * scale) return 0;
  return c > 0 ? 1 : -1;
}

/// Intersections of two equal-radius circles, lexicographically ordered.
inline std::vector<Point> circle_circle_intersections(Point c1, Point c2, double r,
                                                      const Tolerance& tol = {}) {
  const Point d = c2 - c1;
  const double dist = norm(d);
  if (dist <= tol.epsilon || dist > 2.0 * r + tol.epsilon) return {};
  const Point mid = 0.5 * (c1 + c2);
  if (std::abs(dist - 2.0 * r) <= tol.epsilon) return {mid};
  const double h = std::sqrt(std::max(0.0, r * r - 0.25 * dist * dist));
  const Point perp{-d.y / dist, d.x / dist};
  std::vector<Point> out{mid + h * perp, mid - h * perp};
  std::sort(out.begin(), out.end());
  return out;
}

struct Segment {
  Point a;
  Point b;
};

/// Crossing point of two closed segments, absent when they are disjoint.
/// Collinear overlap throws DegenerateOverlap.
inline std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2,
                                                 const Tolerance& tol = {}) {
  const Point r = s1.b - s1.a;
  const Point s = s2.b - s2.a;
  const double denom = cross(r, s);
  const Point qp = s2.a - s1.a;
  const double rl = norm(r), sl = norm(s);
  if (std::abs(denom) <= tol.epsilon * rl * sl) {
    // parallel; overlapping only if collinear
    if (std::abs(cross(qp, r)) > tol.epsilon * rl) return std::nullopt;
    const double rr = dot(r, r);
    const double t0 = dot(qp, r) / rr;
    const double t1 = dot(s2.b - s1.a, r) / rr;
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    const double slack = tol.epsilon / rl;
    if (hi < -slack || lo > 1.0 + slack) return std::nullopt;
    throw Error(ErrorCode::DegenerateOverlap, "collinear segments share a sub-segment");
  }
  const double t = cross(qp, s) / denom;
  const double u = cross(qp, r) / denom;
  const double ts = tol.epsilon / rl, us = tol.epsilon / sl;
  if (t < -ts || t > 1.0 + ts || u < -us || u > 1.0 + us) return std::nullopt;
  return s1.a + std::clamp(t, 0.0, 1.0) * r;
}

inline double distance_to_segment(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.a + t * d);
}

using Ring = std::vector<Point>;

inline double signed_area(const Ring& ring) {
  double a = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
  return 0.5 * a;
}

inline Segment ring_edge(const Ring& ring, std::size_t i) {
  return {ring[i], ring[(i + 1) % ring.size()]};
}

/// Even-odd crossing test; boundary handling is left to the caller.
inline bool crossing_inside(const Ring& ring, Point p) {
  bool inside = false;
  for (std::size_t i = 0, n = ring.size(), j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

inline bool ring_is_convex(const Ring& ring, const Tolerance& tol = {}) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int o = orientation(ring[i], ring[(i + 1) % n], ring[(i + 2) % n], tol);
    if (o == 0) continue;
    if (sign == 0) sign = o;
    else if (o != sign) return false;
  }
  return sign != 0;
}

enum class ShapeKind { Disk, ConvexPolygon, SimplePolygon };

/// The translatable prototype. Polygon outers are stored counter-clockwise and
/// holes clockwise; containment is closed.
struct Shape {
  ShapeKind kind = ShapeKind::Disk;
  double radius = 0.0;
  Point center;
  Ring outer;
  std::vector<Ring> holes;
  Point reference;

  bool is_disk() const { return kind == ShapeKind::Disk; }
  bool is_polygon() const { return kind != ShapeKind::Disk; }
  std::size_t vertex_count() const {
    std::size_t m = outer.size();
    for (const auto& h : holes) m += h.size();
    return m;
  }

  /// Boundary edges of all rings.
  std::vector<Segment> edges() const {
    std::vector<Segment> out;
    for (std::size_t i = 0; i < outer.size(); ++i) out.push_back(ring_edge(outer, i));
    for (const auto& h : holes)
      for (std::size_t i = 0; i < h.size(); ++i) out.push_back(ring_edge(h, i));
    return out;
  }

  /// Largest distance between two boundary vertices (2r for disks).
  double diameter() const {
    if (is_disk()) return 2.0 * radius;
    double d = 0.0;
    for (const auto& a : outer)
      for (const auto& b : outer) d = std::max(d, distance(a, b));
    return d;
  }

  static Shape disk(double radius, Point center = {});
  static Shape disk(double radius, Point center, Point reference);
  /// Classifies as ConvexPolygon when there are no holes and the outer ring is convex.
  static Shape polygon(Ring outer, std::vector<Ring> holes = {});
  static Shape polygon(Ring outer, std::vector<Ring> holes, Point reference);
  /// Throws NotConvex unless the ring is convex.
  static Shape convex_polygon(Ring outer);
  /// Keeps the SimplePolygon tag even for convex input.
  static Shape simple_polygon(Ring outer, std::vector<Ring> holes = {});
};

namespace detail {

inline void orient(Ring& ring, bool ccw) {
  if ((signed_area(ring) > 0.0) != ccw) std::reverse(ring.begin(), ring.end());
}

inline void check_finite(const Ring& ring) {
  for (const auto& p : ring)
    if (!is_finite(p)) throw Error(ErrorCode::InvalidShape, "non-finite polygon vertex");
}

inline bool edges_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  return i == j || (i + 1) % n == j || (j + 1) % n == i;
}

inline void check_simple(const Shape& s, const Tolerance& tol) {
  std::vector<const Ring*> rings{&s.outer};
  for (const auto& h : s.holes) rings.push_back(&h);
  for (const Ring* r : rings) {
    if (r->size() < 3) throw Error(ErrorCode::InvalidPolygon, "ring with fewer than 3 vertices");
    if (std::abs(signed_area(*r)) <= tol.epsilon)
      throw Error(ErrorCode::InvalidPolygon, "ring has zero area");
  }
  for (std::size_t ra = 0; ra < rings.size(); ++ra) {
    for (std::size_t rb = ra; rb < rings.size(); ++rb) {
      const Ring& A = *rings[ra];
      const Ring& B = *rings[rb];
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = (ra == rb ? i : 0); j < B.size(); ++j) {
          if (ra == rb && edges_adjacent(i, j, A.size())) continue;
          std::optional<Point> hit;
          try {
            hit = segment_intersection(ring_edge(A, i), ring_edge(B, j), tol);
          } catch (const Error&) {
            throw Error(ErrorCode::InvalidPolygon, "polygon edges overlap");
          }
          if (hit) throw Error(ErrorCode::InvalidPolygon, "polygon boundary self-intersects");
        }
      }
    }
  }
  for (const auto& h : s.holes)
    for (const auto& p : h)
      if (!crossing_inside(s.outer, p))
        throw Error(ErrorCode::InvalidPolygon, "hole vertex outside the outer boundary");
}

inline Shape make_polygon(Ring outer, std::vector<Ring> holes, Point reference, bool force_simple) {
  Shape s;
  s.outer = std::move(outer);
  s.holes = std::move(holes);
  check_finite(s.outer);
  for (const auto& h : s.holes) check_finite(h);
  if (!is_finite(reference)) throw Error(ErrorCode::InvalidShape, "non-finite reference point");
  const Tolerance tol;
  check_simple(s, tol);
  orient(s.outer, true);
  for (auto& h : s.holes) orient(h, false);
  s.reference = reference;
  s.kind = (!force_simple && s.holes.empty() && ring_is_convex(s.outer, tol)) ? ShapeKind::ConvexPolygon
                                                                             : ShapeKind::SimplePolygon;
  return s;
}

}  // namespace detail

inline Shape Shape::disk(double radius, Point center) { return disk(radius, center, center); }

inline Shape Shape::disk(double radius, Point center, Point reference) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw Error(ErrorCode::InvalidShape, "disk radius must be positive and finite");
  if (!is_finite(center) || !is_finite(reference))
    throw Error(ErrorCode::InvalidShape, "non-finite disk center or reference");
  Shape s;
  s.kind = ShapeKind::Disk;
  s.radius = radius;
  s.center = center;
  s.reference = reference;
  return s;
}

inline Shape Shape::polygon(Ring outer, std::vector<Ring> holes) {
  if (outer.empty()) throw Error(ErrorCode::InvalidPolygon, "empty outer boundary");
  const Point ref = outer.front();
  return detail::make_polygon(std::move(outer), std::move(holes), ref, false);
}

inline Shape Shape::polygon(Ring outer, std::vector<Ring> holes, Point reference) {
  return detail::make_polygon(std::move(outer), std::move(holes), reference, false);
}

inline Shape Shape::convex_polygon(Ring outer) {
  Shape s = polygon(std::move(outer));
  if (s.kind != ShapeKind::ConvexPolygon) throw Error(ErrorCode::NotConvex, "prototype is not convex");
  return s;
}

inline Shape Shape::simple_polygon(Ring outer, std::vector<Ring> holes) {
  if (outer.empty()) throw Error(ErrorCode::InvalidPolygon, "empty outer boundary");
  const Point ref = outer.front();
  return detail::make_polygon(std::move(outer), std::move(holes), ref, true);
}

/// True iff `p` lies in the closed translate of `shape` whose reference sits at `at`.
inline bool contains(const Shape& shape, Point at, Point p, const Tolerance& tol = {}) {
  const Point q = p - (at - shape.reference);
  if (shape.is_disk()) return distance(q, shape.center) <= shape.radius + tol.epsilon;
  auto on_ring = [&](const Ring& ring) {
    for (std::size_t i = 0; i < ring.size(); ++i)
      if (distance_to_segment(q, ring_edge(ring, i)) <= tol.epsilon) return true;
    return false;
  };
  if (on_ring(shape.outer)) return true;
  for (const auto& h : shape.holes)
    if (on_ring(h)) return true;
  if (!crossing_inside(shape.outer, q)) return false;
  for (const auto& h : shape.holes)
    if (crossing_inside(h, q)) return false;
  return true;
}

/// Reflection of the shape through its reference point.
inline Shape point_inversion(const Shape& shape) {
  Shape out = shape;
  auto reflect = [&](Point v) { return 2.0 * shape.reference - v; };
  out.center = reflect(shape.center);
  for (auto& v : out.outer) v = reflect(v);
  for (auto& h : out.holes)
    for (auto& v : h) v = reflect(v);
  if (out.is_polygon()) {
    detail::orient(out.outer, true);
    for (auto& h : out.holes) detail::orient(h, false);
  }
  return out;
}

/// Copy of `shape` moved so its reference point sits at `at`.
inline Shape translated(const Shape& shape, Point at) {
  Shape out = shape;
  const Point d = at - shape.reference;
  out.center = shape.center + d;
  for (auto& v : out.outer) v = v + d;
  for (auto& h : out.holes)
    for (auto& v : h) v = v + d;
  out.reference = at;
  return out;
}

/// Rotation of the whole shape (reference included) about the origin.
inline Shape rotated(const Shape& shape, double angle) {
  Shape out = shape;
  out.center = rotate(shape.center, angle);
  out.reference = rotate(shape.reference, angle);
  for (auto& v : out.outer) v = rotate(v, angle);
  for (auto& h : out.holes)
    for (auto& v : h) v = rotate(v, angle);
  return out;
}

/// Axis-aligned bounds of a placed shape: {min, max}.
inline std::array<Point, 2> bounds(const Shape& shape) {
  if (shape.is_disk())
    return {shape.center - Point{shape.radius, shape.radius},
            shape.center + Point{shape.radius, shape.radius}};
  Point lo = shape.outer.front(), hi = lo;
  for (const auto& v : shape.outer) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  return {lo, hi};
}

}  // namespace geocover
