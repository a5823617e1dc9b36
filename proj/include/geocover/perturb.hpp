#pragma once

// Input preparation: duplicate removal, degeneracy detection and the
// deterministic perturbation of P that restores general position.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/neighbors.hpp"

namespace geocover {

struct Deduplicated {
  std::vector<Point> points;
  /// input index -> index into `points`
  std::vector<std::size_t> unique_of;
  /// (dropped input index, kept input index)
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
};

inline Deduplicated deduplicate(const std::vector<Point>& input, const Tolerance& tol = {}) {
  Deduplicated out;
  out.unique_of.assign(input.size(), 0);
  const auto near = pairs_within(input, tol.epsilon);
  std::vector<std::size_t> first(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) first[i] = i;
  for (const auto& [i, j] : near) first[j] = std::min(first[j], first[i]);
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!is_finite(input[i])) throw Error(ErrorCode::Parse, "non-finite input point");
    if (first[i] == i) {
      out.unique_of[i] = out.points.size();
      out.points.push_back(input[i]);
    } else {
      out.unique_of[i] = out.unique_of[first[i]];
      out.duplicates.emplace_back(i, first[i]);
    }
  }
  return out;
}

struct DegeneracyReport {
  std::size_t coincident = 0;
  std::size_t tangent = 0;
  std::size_t concurrent = 0;
  std::size_t event_ties = 0;
  std::size_t overlaps = 0;

  bool any() const { return coincident + tangent + concurrent + event_ties + overlaps > 0; }

  std::string summary() const {
    std::ostringstream os;
    os << "coincident=" << coincident << " tangent=" << tangent << " concurrent=" << concurrent
       << " event_ties=" << event_ties << " overlaps=" << overlaps;
    return os.str();
  }
};

namespace detail {

/// Vertex events closer than this in x count as tied.
inline double tie_threshold(const Tolerance& tol) { return tol.epsilon * 1e-3; }

inline std::size_t count_x_ties(std::vector<std::pair<double, std::size_t>> xs, double threshold) {
  std::sort(xs.begin(), xs.end());
  std::size_t ties = 0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i].second != xs[i - 1].second && xs[i].first - xs[i - 1].first <= threshold) ++ties;
  return ties;
}

}  // namespace detail

/// Degeneracies of the arrangement of radius-r circles centered at `centers`.
inline DegeneracyReport find_disk_degeneracies(const std::vector<Point>& centers, double r,
                                               const Tolerance& tol = {}) {
  DegeneracyReport rep;
  const double eps = tol.epsilon;
  const auto pairs = pairs_within(centers, 2.0 * r + eps);
  std::vector<std::vector<std::size_t>> adj(centers.size());
  for (const auto& [i, j] : pairs) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  auto on_circle = [&](Point p, std::size_t k) { return std::abs(distance(p, centers[k]) - r) <= eps; };
  for (std::size_t i = 0; i < centers.size(); ++i) {
    // extreme points lying on a neighbouring circle
    for (Point e : {centers[i] - Point{r, 0.0}, centers[i] + Point{r, 0.0}})
      for (auto k : adj[i])
        if (on_circle(e, k)) ++rep.coincident;
  }
  for (const auto& [i, j] : pairs) {
    const double d = distance(centers[i], centers[j]);
    if (d <= eps) {
      ++rep.coincident;
      continue;
    }
    if (std::abs(d - 2.0 * r) <= eps) {
      ++rep.tangent;
      continue;
    }
    for (Point p : circle_circle_intersections(centers[i], centers[j], r, tol)) {
      for (auto k : adj[i])
        if (k != j && on_circle(p, k)) ++rep.concurrent;
    }
  }
  std::vector<std::pair<double, std::size_t>> xs;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    xs.emplace_back(centers[i].x - r, i);
    xs.emplace_back(centers[i].x + r, i);
  }
  rep.event_ties = detail::count_x_ties(std::move(xs), detail::tie_threshold(tol));
  return rep;
}

/// Degeneracies of an arrangement of placed polygons (already in sweep frame).
inline DegeneracyReport find_polygon_degeneracies(const std::vector<Shape>& placed, const Tolerance& tol = {}) {
  DegeneracyReport rep;
  const double eps = tol.epsilon;
  const std::size_t n = placed.size();
  std::vector<std::array<Point, 2>> box(n);
  std::vector<std::vector<Segment>> edges(n);
  std::vector<std::vector<Point>> verts(n);
  for (std::size_t i = 0; i < n; ++i) {
    box[i] = bounds(placed[i]);
    edges[i] = placed[i].edges();
    for (const auto& e : edges[i]) verts[i].push_back(e.a);
  }
  auto overlap = [&](std::size_t i, std::size_t j) {
    return !(box[i][1].x + eps < box[j][0].x || box[j][1].x + eps < box[i][0].x ||
             box[i][1].y + eps < box[j][0].y || box[j][1].y + eps < box[i][0].y);
  };
  auto inside_box = [&](Point p, std::size_t k) {
    return p.x >= box[k][0].x - eps && p.x <= box[k][1].x + eps && p.y >= box[k][0].y - eps &&
           p.y <= box[k][1].y + eps;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!overlap(i, j)) continue;
      for (const auto& v : verts[i])
        for (const auto& e : edges[j])
          if (distance_to_segment(v, e) <= eps) ++rep.coincident;
      for (const auto& v : verts[j])
        for (const auto& e : edges[i])
          if (distance_to_segment(v, e) <= eps) ++rep.coincident;
      for (const auto& s : edges[i]) {
        for (const auto& t : edges[j]) {
          std::optional<Point> hit;
          try {
            hit = segment_intersection(s, t, tol);
          } catch (const Error&) {
            ++rep.overlaps;
            continue;
          }
          if (!hit) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j || !inside_box(*hit, k)) continue;
            for (const auto& e : edges[k])
              if (distance_to_segment(*hit, e) <= eps) ++rep.concurrent;
          }
        }
      }
    }
  }
  std::vector<std::pair<double, std::size_t>> xs;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : verts[i]) xs.emplace_back(v.x, i);
  rep.event_ties = detail::count_x_ties(std::move(xs), detail::tie_threshold(tol));
  return rep;
}

struct PerturbationRecord {
  bool applied = false;
  std::uint64_t seed = 0;
  double magnitude = 0.0;
  int attempts = 0;
};

/// Offsets in [-magnitude, magnitude]^2 drawn from a seed-derived stream.
inline std::vector<Point> perturbed(const std::vector<Point>& points, std::uint64_t seed, int attempt,
                                    double magnitude) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt));
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  std::vector<Point> out = points;
  for (auto& p : out) {
    const double dx = unit(), dy = unit();
    p = p + magnitude * Point{dx, dy};
  }
  return out;
}

/// Returns `points` unchanged when `check` finds no degeneracy; otherwise
/// retries seeded perturbations and throws DegeneracyUnresolved if none helps.
template <class Check>
std::vector<Point> resolve_degeneracies(const std::vector<Point>& points, std::uint64_t seed, const Tolerance& tol,
                                        Check&& check, PerturbationRecord& record, int max_attempts = 8) {
  record = PerturbationRecord{false, seed, 0.0, 0};
  DegeneracyReport rep = check(points);
  if (!rep.any()) return points;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto moved = perturbed(points, seed, attempt, tol.perturbation);
    rep = check(moved);
    if (!rep.any()) {
      record = PerturbationRecord{true, seed, tol.perturbation, attempt};
      return moved;
    }
  }
  throw Error(ErrorCode::DegeneracyUnresolved, "degeneracies survive perturbation (" + rep.summary() + ")");
}

}  // namespace geocover
