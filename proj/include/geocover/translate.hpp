#pragma once

#include <algorithm>
#include <vector>

#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"

namespace geocover {

/// One element of the reduced solution space: a placement of the reference
/// point and the indices of the points its translate covers.
struct CanonicalTranslate {
  Point reference;
  std::vector<std::size_t> covered;
};

/// Points of P inside the translate of `shape` placed at `at`.
inline IndexSet covered_by(const Shape& shape, Point at, const std::vector<Point>& points, const Tolerance& tol = {}) {
  IndexSet s(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (contains(shape, at, points[i], tol)) s.insert(i);
  return s;
}

/// Sorted covered-set family of a translate list.
inline std::vector<std::vector<std::size_t>> covered_family(const std::vector<CanonicalTranslate>& ts) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.covered);
  std::sort(out.begin(), out.end());
  return out;
}

inline void sort_by_covered(std::vector<CanonicalTranslate>& ts) {
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.covered < b.covered; });
}

}  // namespace geocover
