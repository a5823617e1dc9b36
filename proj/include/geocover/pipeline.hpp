#pragma once

// End-to-end discretization: deduplicate, normalize, perturb into general
// position, report the canonical translates and optionally solve the cover.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "geocover/disk_sweep.hpp"
#include "geocover/disk_traverse.hpp"
#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/inverse.hpp"
#include "geocover/oracle.hpp"
#include "geocover/perturb.hpp"
#include "geocover/polygon_arrangement.hpp"
#include "geocover/setcover.hpp"
#include "geocover/translate.hpp"

namespace geocover {

enum class Algorithm { Sweep, Traverse, Polygon, Oracle, Auto };
enum class Solver { None, Greedy, Exact };

inline std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Sweep: return "sweep";
    case Algorithm::Traverse: return "traverse";
    case Algorithm::Polygon: return "polygon";
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Auto: return "auto";
  }
  return "auto";
}

inline std::string to_string(Solver s) {
  switch (s) {
    case Solver::None: return "none";
    case Solver::Greedy: return "greedy";
    case Solver::Exact: return "exact";
  }
  return "none";
}

/// Prototype as given by the user; disks may carry a linear transform that
/// turns them into ellipses.
struct ShapeSpec {
  Shape shape;
  std::optional<AffineTransform> transform;
};

struct DiscretizeOptions {
  Algorithm algorithm = Algorithm::Auto;
  Solver solver = Solver::None;
  Tolerance tol;
  std::uint64_t seed = 0;
  OracleCaps caps;
  std::size_t exact_cap = 25;
};

struct DiscretizeStats {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t e0 = 0;
  std::size_t events = 0;
  std::size_t faces = 0;
  std::size_t duplicates = 0;
};

struct DiscretizeResult {
  /// references in the input frame, covered lists in input indices
  std::vector<CanonicalTranslate> translates;
  DiscretizeStats stats;
  PerturbationRecord perturbation;
  std::optional<CoverSolution> solution;
  Algorithm algorithm = Algorithm::Auto;
};

namespace detail {

/// Smallest length the tolerances must stay below: the radius of a disk or
/// the shortest polygon edge.
inline double feature_scale(const Shape& s) {
  if (s.is_disk()) return s.radius;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : s.edges()) best = std::min(best, distance(e.a, e.b));
  return best;
}

struct RawReport {
  std::vector<CanonicalTranslate> translates;
  IntersectionStats stats;
  std::size_t events = 0;
  std::size_t faces = 0;
};

inline RawReport run_disk(const std::vector<Point>& pts, double r, Algorithm alg, const DiscretizeOptions& opt) {
  RawReport out;
  switch (alg) {
    case Algorithm::Sweep: {
      auto rep = report_canonical_disks(pts, r, opt.tol);
      out.translates = std::move(rep.translates);
      out.stats = std::move(rep.stats);
      out.events = rep.events;
      out.faces = out.translates.size();
      break;
    }
    case Algorithm::Traverse: {
      auto rep = traverse_canonical_disks(pts, r, opt.tol);
      out.translates = std::move(rep.translates);
      out.stats = std::move(rep.stats);
      out.events = rep.walk.walks;
      out.faces = rep.walk.faces_closed + rep.stats.e0;
      break;
    }
    case Algorithm::Oracle: {
      out.translates = oracle_canonical_disks(pts, r, opt.tol, opt.caps);
      out.stats = disk_intersection_stats(pts, r);
      out.faces = out.translates.size();
      break;
    }
    default: throw Error(ErrorCode::InvalidShape, "algorithm " + to_string(alg) + " needs a polygon prototype");
  }
  return out;
}

inline RawReport run_polygon(const std::vector<Point>& pts, const Shape& proto, Algorithm alg,
                             const DiscretizeOptions& opt) {
  RawReport out;
  if (alg == Algorithm::Oracle) {
    out.translates = oracle_canonical_polygons(pts, proto, opt.tol, opt.caps);
    out.stats = intersection_stats(build_inverses(pts, proto), opt.tol);
    out.faces = out.translates.size();
    return out;
  }
  if (alg != Algorithm::Polygon) throw Error(ErrorCode::InvalidShape, "algorithm " + to_string(alg) + " needs a disk");
  PolygonReport rep = proto.kind == ShapeKind::ConvexPolygon ? report_canonical_convex_polygon(pts, proto, opt.tol)
                                                             : report_canonical_simple_polygon(pts, proto, opt.tol);
  out.translates = std::move(rep.translates);
  out.stats = std::move(rep.stats);
  out.events = rep.events;
  out.faces = rep.sink_faces;
  return out;
}

}  // namespace detail

inline DiscretizeResult discretize(const std::vector<Point>& input, const ShapeSpec& spec,
                                   const DiscretizeOptions& opt = {}) {
  DiscretizeResult res;
  const Shape& proto = spec.shape;
  const bool disk = proto.is_disk();
  res.algorithm = opt.algorithm == Algorithm::Auto ? (disk ? Algorithm::Traverse : Algorithm::Polygon) : opt.algorithm;
  res.stats.n = input.size();
  opt.tol.validate(detail::feature_scale(proto));
  if (input.empty()) return res;

  const Deduplicated dd = deduplicate(input, opt.tol);
  res.stats.duplicates = dd.duplicates.size();

  // Disks are solved for a center-referenced disk at the origin in the
  // (possibly pulled back) frame, then mapped forward.
  std::vector<Point> pts = dd.points;
  AffineTransform forward;
  double radius = proto.radius;
  if (disk) {
    if (spec.transform) {
      pts = normalize_affine_disk(pts, *spec.transform, radius, opt.tol).points;
      forward = *spec.transform;
    }
    forward.offset = forward.offset + (proto.reference - proto.center);
  }

  if (disk) {
    const double r = radius;
    pts = resolve_degeneracies(
        pts, opt.seed, opt.tol, [&](const std::vector<Point>& q) { return find_disk_degeneracies(q, r, opt.tol); },
        res.perturbation);
  } else {
    const RotationFrame frame = make_rotation_frame(proto);
    pts = resolve_degeneracies(
        pts, opt.seed, opt.tol,
        [&](const std::vector<Point>& q) {
          return find_polygon_degeneracies(detail::placed_inverses(q, proto, frame), opt.tol);
        },
        res.perturbation);
  }

  detail::RawReport raw = disk ? detail::run_disk(pts, radius, res.algorithm, opt)
                               : detail::run_polygon(pts, proto, res.algorithm, opt);
  res.stats.k = raw.stats.k;
  res.stats.e0 = raw.stats.e0;
  res.stats.events = raw.events;
  res.stats.faces = raw.faces;

  std::vector<std::vector<std::size_t>> members(dd.points.size());
  for (std::size_t i = 0; i < input.size(); ++i) members[dd.unique_of[i]].push_back(i);
  for (auto& t : raw.translates) {
    CanonicalTranslate out;
    out.reference = disk ? forward.apply(t.reference) : t.reference;
    for (auto u : t.covered) out.covered.insert(out.covered.end(), members[u].begin(), members[u].end());
    std::sort(out.covered.begin(), out.covered.end());
    res.translates.push_back(std::move(out));
  }
  sort_by_covered(res.translates);

  if (opt.solver != Solver::None) {
    const CoverInstance inst = to_cover_instance(res.translates, input.size());
    res.solution = opt.solver == Solver::Greedy ? greedy_cover(inst) : exact_cover(inst, opt.exact_cap);
  }
  return res;
}

}  // namespace geocover
