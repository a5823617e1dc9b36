#pragma once

// Point inverses through P: for every input point, the region of reference
// placements whose translate covers that point.

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"

namespace geocover {

/// x -> linear * x + offset
struct AffineTransform {
  std::array<std::array<double, 2>, 2> linear{{{1.0, 0.0}, {0.0, 1.0}}};
  Point offset;

  double determinant() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }

  Point apply(Point p) const {
    return Point{linear[0][0] * p.x + linear[0][1] * p.y, linear[1][0] * p.x + linear[1][1] * p.y} + offset;
  }

  Point apply_inverse(Point p) const {
    const double det = determinant();
    const Point q = p - offset;
    return {(linear[1][1] * q.x - linear[0][1] * q.y) / det, (-linear[1][0] * q.x + linear[0][0] * q.y) / det};
  }
};

struct NormalizedDisk {
  std::vector<Point> points;
  Shape prototype;
};

/// The ellipse {transform(u) : |u| <= radius} becomes a plain disk once the
/// points are pulled back through the transform. A translate placed at c in
/// the normalized frame corresponds to transform.apply(c) in the original one.
inline NormalizedDisk normalize_affine_disk(const std::vector<Point>& points, const AffineTransform& transform,
                                            double radius, const Tolerance& tol = {}) {
  if (std::abs(transform.determinant()) <= tol.epsilon)
    throw Error(ErrorCode::SingularTransform, "affine transform is not invertible");
  NormalizedDisk out{{}, Shape::disk(radius)};
  out.points.reserve(points.size());
  for (const auto& p : points) out.points.push_back(transform.apply_inverse(p));
  return out;
}

struct PointInverseSet {
  std::vector<Shape> inverses;
  std::vector<std::size_t> source;
};

inline PointInverseSet build_inverses(const std::vector<Point>& points, const Shape& prototype) {
  const Shape inverse = point_inversion(prototype);
  PointInverseSet out;
  out.inverses.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.inverses.push_back(translated(inverse, points[i]));
    out.source.push_back(i);
  }
  return out;
}

struct IntersectionStats {
  std::size_t k = 0;
  std::size_t e0 = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Closed-region intersection of two placed inverses of the same prototype.
inline bool regions_intersect(const Shape& a, const Shape& b, const Tolerance& tol = {}) {
  if (a.is_disk()) return distance(a.center, b.center) <= a.radius + b.radius;
  const auto ba = bounds(a), bb = bounds(b);
  if (ba[1].x < bb[0].x || bb[1].x < ba[0].x || ba[1].y < bb[0].y || bb[1].y < ba[0].y) return false;
  const auto ea = a.edges(), eb = b.edges();
  for (const auto& s : ea) {
    for (const auto& t : eb) {
      try {
        if (segment_intersection(s, t, tol)) return true;
      } catch (const Error&) {
        return true;
      }
    }
  }
  return contains(b, b.reference, a.outer.front(), tol) || contains(a, a.reference, b.outer.front(), tol);
}

inline IntersectionStats intersection_stats(const PointInverseSet& inv, const Tolerance& tol = {}) {
  const std::size_t n = inv.inverses.size();
  IntersectionStats st;
  std::vector<bool> touched(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (regions_intersect(inv.inverses[i], inv.inverses[j], tol)) {
        st.pairs.emplace_back(i, j);
        touched[i] = touched[j] = true;
      }
    }
  }
  st.k = st.pairs.size();
  for (bool t : touched)
    if (!t) ++st.e0;
  return st;
}

}  // namespace geocover
