#pragma once

// Two extremal inputs: a pair of spiked squares whose boundaries cross
// quadratically often, and a family of huge circles that behaves like a
// grid of lines near the origin and produces quadratically many sink faces.

#include <cmath>
#include <vector>

#include "geocover/geom.hpp"
#include "geocover/inverse.hpp"

namespace geocover {

/// Unit square with `a` triangular spikes of height `height` on each side,
/// counter-clockwise from (0,0); 8a vertices.
inline Ring spiked_square(std::size_t a, double side = 1.0, double height = 3.0) {
  const Point corners[4] = {{0, 0}, {side, 0}, {side, side}, {0, side}};
  const Point outward[4] = {{0, -1}, {1, 0}, {0, 1}, {-1, 0}};
  const double w = side / static_cast<double>(a);
  Ring r;
  for (int s = 0; s < 4; ++s) {
    const Point c0 = corners[s];
    const Point dir = (1.0 / side) * (corners[(s + 1) % 4] - c0);
    r.push_back(c0);
    for (std::size_t k = 0; k < a; ++k) {
      const double kd = static_cast<double>(k);
      r.push_back(c0 + ((kd + 0.5) * w) * dir + height * outward[s]);
      if (k + 1 < a) r.push_back(c0 + ((kd + 1.0) * w) * dir);
    }
  }
  return r;
}

struct SpikedPair {
  /// prototype whose point inverse is the spiked square referenced at (0,0)
  Shape prototype;
  std::vector<Point> points;
  std::size_t a = 0;
  /// 8a^2
  std::size_t expected_crossings = 0;
};

/// The two inverses are the spiked square S and S + (-d, d) with
/// d = (side + height) / 2: the top spikes of S cross the right spikes of the
/// copy and the left spikes of S cross its bottom spikes, a x a spike pairs
/// each, four crossings per pair.
inline SpikedPair spiked_pair(std::size_t a, double side = 1.0, double height = 3.0) {
  SpikedPair out;
  out.a = a;
  const Shape s = Shape::simple_polygon(spiked_square(a, side, height));
  out.prototype = point_inversion(s);
  const double d = 0.5 * (side + height);
  out.points = {{0.0, 0.0}, {-d, d}};
  out.expected_crossings = 8 * a * a;
  return out;
}

/// Brute-force count of proper crossings between two boundaries.
inline std::size_t count_boundary_crossings(const Shape& a, const Shape& b, const Tolerance& tol = {}) {
  std::size_t n = 0;
  for (const auto& s : a.edges())
    for (const auto& t : b.edges())
      if (segment_intersection(s, t, tol)) ++n;
  return n;
}

struct CircleGrid {
  std::vector<Point> centers;
  double radius = 0.0;
  std::size_t a = 0;
};

/// 4a circles of radius 200a^2. Near [0, 2a]^2 circle W_j looks like the
/// line x = 2j+1 with the interior on the left, E_j like x = 2j with the
/// interior on the right, and S_j, N_j likewise in y. Each cell
/// (2j, 2j+1) x (2l, 2l+1) is a convex face inside 2a+2 circles.
inline CircleGrid dense_circle_grid(std::size_t a) {
  CircleGrid g;
  g.a = a;
  const double ad = static_cast<double>(a);
  g.radius = 200.0 * ad * ad;
  const double r = g.radius;
  // centers sit on a cell midline so no extreme point lands near a line
  const double mid = ad + 0.5;
  std::size_t k = 0;
  auto jitter = [&k] {
    const double phi = 0.6180339887498949;
    const double v = static_cast<double>(++k) * phi;
    return 0.01 * (v - std::floor(v));
  };
  for (std::size_t j = 0; j < a; ++j) {
    const double t = 2.0 * static_cast<double>(j), s = t + 1.0;
    g.centers.push_back({s - r, mid + jitter()});  // west
    g.centers.push_back({t + r, mid + jitter()});  // east
    g.centers.push_back({mid + jitter(), s - r});  // south
    g.centers.push_back({mid + jitter(), t + r});  // north
  }
  return g;
}

}  // namespace geocover
