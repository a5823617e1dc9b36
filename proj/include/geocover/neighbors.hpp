#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geocover/geom.hpp"

namespace geocover {

/// Uniform-grid pair search: every unordered pair (i < j) with
/// |p_i - p_j| <= reach, probing the 3x3 cell neighbourhood. Sorted output.
inline std::vector<std::pair<std::size_t, std::size_t>> pairs_within(const std::vector<Point>& points,
                                                                     double reach) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (points.size() < 2 || !(reach > 0.0)) return out;
  auto key = [](std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint64_t>(cy & 0xffffffff);
  };
  auto cell = [reach](double v) { return static_cast<std::int64_t>(std::floor(v / reach)); };
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < points.size(); ++i) grid[key(cell(points[i].x), cell(points[i].y))].push_back(i);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto cx = cell(points[i].x), cy = cell(points[i].y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = grid.find(key(cx + dx, cy + dy));
        if (it == grid.end()) continue;
        for (auto j : it->second)
          if (j > i && distance(points[i], points[j]) <= reach) out.emplace_back(i, j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Bucketed point set answering "which points lie within `reach` of q" for
/// reach no larger than the cell size.
class PointGrid {
 public:
  PointGrid(const std::vector<Point>& points, double cell) : cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) cells_[key(index(points[i].x), index(points[i].y))].push_back(i);
  }

  template <class Visit>
  void for_each_near(Point q, Visit&& visit) const {
    const auto cx = index(q.x), cy = index(q.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (auto i : it->second) visit(i);
      }
    }
  }

 private:
  static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^ static_cast<std::uint64_t>(cy & 0xffffffff);
  }
  std::int64_t index(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

/// Pairs of radius-r circles whose centers are closer than 2r.
inline std::vector<std::pair<std::size_t, std::size_t>> fixed_radius_neighbors(const std::vector<Point>& points,
                                                                               double radius) {
  auto pairs = pairs_within(points, 2.0 * radius);
  std::erase_if(pairs, [&](const auto& pr) { return !(distance(points[pr.first], points[pr.second]) < 2.0 * radius); });
  return pairs;
}

/// Brute-force counterpart of fixed_radius_neighbors.
inline std::vector<std::pair<std::size_t, std::size_t>> fixed_radius_neighbors_naive(const std::vector<Point>& points,
                                                                                     double radius) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (distance(points[i], points[j]) < 2.0 * radius) out.emplace_back(i, j);
  return out;
}

}  // namespace geocover
