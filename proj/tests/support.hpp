#pragma once

// Random instance generators and small helpers shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"
#include "geocover/translate.hpp"

namespace geocover::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<Point> random_points(Rng& rng, std::size_t n, double extent) {
  std::vector<Point> p(n);
  for (auto& q : p) q = {uniform(rng, 0.0, extent), uniform(rng, 0.0, extent)};
  return p;
}

/// Convex m-gon: sorted random angles on a random ellipse.
inline Ring random_convex_ring(Rng& rng, std::size_t m) {
  std::vector<double> a(m);
  for (auto& t : a) t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  std::sort(a.begin(), a.end());
  const double sx = uniform(rng, 0.6, 1.4), sy = uniform(rng, 0.6, 1.4);
  Ring r;
  for (double t : a) r.push_back({sx * std::cos(t), sy * std::sin(t)});
  return r;
}

/// Star-shaped m-gon around the origin with random radii; usually non-convex.
inline Ring random_star_ring(Rng& rng, std::size_t m) {
  Ring r;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5 * uniform(rng, 0.0, 1.0)) /
                     static_cast<double>(m);
    const double q = uniform(rng, 0.3, 1.2);
    r.push_back({q * std::cos(t), q * std::sin(t)});
  }
  return r;
}

/// Covered-set family as sorted index vectors.
inline std::vector<std::vector<std::size_t>> family(const std::vector<CanonicalTranslate>& ts) {
  return covered_family(ts);
}

/// No set of the family is a subset of another, and none is empty.
inline bool is_antichain(const std::vector<CanonicalTranslate>& ts, std::size_t n) {
  std::vector<IndexSet> sets;
  for (const auto& t : ts) {
    if (t.covered.empty()) return false;
    sets.push_back(IndexSet::from_indices(n, t.covered));
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].is_subset_of(sets[j])) return false;
  return true;
}

inline bool covers_all(const std::vector<CanonicalTranslate>& ts, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (const auto& t : ts)
    for (auto i : t.covered) seen.at(i) = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Every reference re-checked with contains() reproduces its covered set.
inline bool witnesses_valid(const Shape& shape, const std::vector<Point>& pts, const std::vector<CanonicalTranslate>& ts,
                            const Tolerance& tol = {}) {
  for (const auto& t : ts)
    if (covered_by(shape, t.reference, pts, tol).to_vector() != t.covered) return false;
  return true;
}

}  // namespace geocover::testing
