#pragma once

// Left-to-right plane sweep over an arrangement of x-monotone boundary curves
// (semicircles, convex chains or polygon edges). Every sweep-line interval
// points at a region, the swept part of one face. Regions carry the covered
// point set of their face and a sink flag: the flag stays true only while
// every boundary piece seen so far has the region on the interior side of
// its polygon/disk, i.e. the face has no neighbour with a larger covered set.
// For disks and convex polygons this is exactly the convexity of the face.

#include <algorithm>
#include <array>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"

namespace geocover {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class VertexKind { Leftmost, Rightmost, PassThrough };

/// A boundary vertex where curves start and/or end. `starting` and `ending`
/// are ordered bottom to top just right / just left of the vertex.
struct VertexEvent {
  Point at;
  VertexKind kind = VertexKind::Leftmost;
  std::array<std::size_t, 2> ending{npos, npos};
  std::array<std::size_t, 2> starting{npos, npos};
};

/// True when `p` comes after (x, y) in sweep order.
inline bool after(Point p, double x, double y) { return p.x > x || (p.x == x && p.y > y); }

template <class F>
concept CurveFamily = requires(const F& f, std::size_t c, double x, std::vector<Point>& out) {
  { f.curve_count() } -> std::convertible_to<std::size_t>;
  { f.point_count() } -> std::convertible_to<std::size_t>;
  { f.owner(c) } -> std::convertible_to<std::size_t>;
  { f.interior_above(c) } -> std::convertible_to<bool>;
  { f.y_at(c, x) } -> std::convertible_to<double>;
  { f.next_crossing(c, c, x, x) } -> std::same_as<std::optional<Point>>;
  f.sample(c, x, x, out);
  { f.vertex_events() } -> std::convertible_to<std::vector<VertexEvent>>;
};

enum class WitnessRule {
  /// centroid of boundary samples; interior for convex faces
  BoundaryCentroid,
  /// midpoint of the widest vertical trapezoid swept inside the face
  TrapezoidMidpoint,
};

struct SweepFace {
  IndexSet covered;
  Point witness;
};

struct SweepResult {
  std::vector<SweepFace> sink_faces;
  std::size_t events = 0;
  std::size_t intersections = 0;
  std::size_t regions_created = 0;
  std::size_t distinct_region_sets = 0;
};

template <CurveFamily F>
class ArrangementSweep {
 public:
  ArrangementSweep(const F& family, WitnessRule rule, const Tolerance& tol = {})
      : family_(family), rule_(rule), tol_(tol) {}

  SweepResult run() {
    reset();
    const auto vertices = family_.vertex_events();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      const auto& ve = vertices[v];
      queue_.insert(Event{ve.at.x, ve.at.y, priority(ve.kind), npos, npos, v});
    }
    while (!queue_.empty()) {
      const Event ev = *queue_.begin();
      queue_.erase(queue_.begin());
#ifdef GEOCOVER_SWEEP_DEBUG
      debug_check(ev.x);
#endif
      x_ = ev.x;
      y_ = ev.y;
      if (ev.vertex != npos) {
        const auto& ve = vertices[ev.vertex];
        switch (ve.kind) {
          case VertexKind::Leftmost: on_leftmost(ve); break;
          case VertexKind::Rightmost: on_rightmost(ve); break;
          case VertexKind::PassThrough: on_pass(ve); break;
        }
        ++result_.events;
      } else if (on_intersection(ev.a, ev.b)) {
        ++result_.events;
        ++result_.intersections;
      }
    }
    result_.distinct_region_sets = seen_sets_.size();
    return std::move(result_);
  }

 private:
  struct Interval {
    std::size_t region;
    double since;
  };

  struct Region {
    std::size_t parent = 0;
    IndexSet covered;
    bool sink = false;
    std::size_t alive = 0;
    Point sample_sum;
    std::size_t sample_count = 0;
    Point best;
    double best_score = -1.0;
  };

  struct Event {
    double x;
    double y;
    int priority;
    std::size_t a;
    std::size_t b;
    std::size_t vertex;

    friend bool operator<(const Event& l, const Event& r) {
      if (l.x != r.x) return l.x < r.x;
      if (l.y != r.y) return l.y < r.y;
      if (l.priority != r.priority) return l.priority < r.priority;
      if (l.a != r.a) return l.a < r.a;
      if (l.b != r.b) return l.b < r.b;
      return l.vertex < r.vertex;
    }
  };

  static int priority(VertexKind k) {
    switch (k) {
      case VertexKind::Rightmost: return 0;
      case VertexKind::PassThrough: return 1;
      case VertexKind::Leftmost: return 3;
    }
    return 3;
  }
  static constexpr int kIntersectionPriority = 2;

  void reset() {
    result_ = SweepResult{};
    status_.clear();
    intervals_.clear();
    regions_.clear();
    queue_.clear();
    seen_sets_.clear();
    x_ = -std::numeric_limits<double>::infinity();
    y_ = x_;
    const std::size_t outer = new_region(IndexSet(family_.point_count()), false);
    intervals_.push_back(Interval{outer, x_});
    regions_[outer].alive = 1;
  }

  std::size_t new_region(IndexSet covered, bool sink) {
    seen_sets_.insert(covered);
    const std::size_t id = regions_.size();
    Region r;
    r.parent = id;
    r.covered = std::move(covered);
    r.sink = sink;
    regions_.push_back(std::move(r));
    ++result_.regions_created;
    return id;
  }

  std::size_t find(std::size_t r) {
    while (regions_[r].parent != r) {
      regions_[r].parent = regions_[regions_[r].parent].parent;
      r = regions_[r].parent;
    }
    return r;
  }

  double y_at(std::size_t curve) const { return family_.y_at(curve, x_); }

  /// Index of the first status curve not below y at the current x.
  std::size_t insertion_index(double y) const {
    auto it = std::partition_point(status_.begin(), status_.end(),
                                   [&](std::size_t c) { return family_.y_at(c, x_) < y; });
    return static_cast<std::size_t>(it - status_.begin());
  }

  std::size_t position_of(std::size_t curve) const {
    const std::size_t guess = insertion_index(y_ - tol_.epsilon);
    const std::size_t lo = guess >= 3 ? guess - 3 : 0;
    const std::size_t hi = std::min(status_.size(), guess + 4);
    for (std::size_t i = lo; i < hi; ++i)
      if (status_[i] == curve) return i;
    for (std::size_t i = 0; i < status_.size(); ++i)
      if (status_[i] == curve) return i;
    throw std::logic_error("sweep status lost a curve");
  }

  /// Bounds of interval i: status_[i-1] below, status_[i] above.
  bool locally_sink(std::size_t i) const {
    if (i == 0 || i >= status_.size()) return false;
    return family_.interior_above(status_[i - 1]) && !family_.interior_above(status_[i]);
  }

  void refresh_flag(std::size_t i) {
    Region& r = regions_[find(intervals_[i].region)];
    r.sink = r.sink && locally_sink(i);
  }

  /// Closes the trapezoid swept by interval i since its bounds last changed.
  void close_trapezoid(std::size_t i) {
    Interval& iv = intervals_[i];
    const double x0 = iv.since;
    iv.since = x_;
    if (i == 0 || i >= status_.size() || !(x_ > x0)) return;
    Region& r = regions_[find(iv.region)];
    const std::size_t lower = status_[i - 1], upper = status_[i];
    if (rule_ == WitnessRule::BoundaryCentroid) {
      scratch_.clear();
      family_.sample(lower, x0, x_, scratch_);
      family_.sample(upper, x0, x_, scratch_);
      for (const auto& p : scratch_) r.sample_sum = r.sample_sum + p;
      r.sample_count += scratch_.size();
    }
    const double xm = 0.5 * (x0 + x_);
    const double ylo = family_.y_at(lower, xm), yhi = family_.y_at(upper, xm);
    const double score = std::min(yhi - ylo, x_ - x0);
    if (score > r.best_score) {
      r.best_score = score;
      r.best = Point{xm, 0.5 * (ylo + yhi)};
    }
  }

  void release(std::size_t region) {
    const std::size_t root = find(region);
    Region& r = regions_[root];
    assert(r.alive > 0);
    if (--r.alive > 0) return;
    if (!r.sink) return;
    Point witness = r.best;
    if (rule_ == WitnessRule::BoundaryCentroid && r.sample_count > 0)
      witness = (1.0 / static_cast<double>(r.sample_count)) * r.sample_sum;
    result_.sink_faces.push_back(SweepFace{r.covered, witness});
  }

  IndexSet covered_above(std::size_t below_interval, std::size_t curve) {
    IndexSet s = regions_[find(intervals_[below_interval].region)].covered;
    if (family_.interior_above(curve)) s.insert(family_.owner(curve));
    else s.erase(family_.owner(curve));
    return s;
  }

  void schedule(std::size_t lower_pos) {
    if (lower_pos + 1 >= status_.size()) return;
    std::size_t a = status_[lower_pos], b = status_[lower_pos + 1];
    if (a > b) std::swap(a, b);
    if (auto p = family_.next_crossing(a, b, x_, y_))
      queue_.insert(Event{p->x, p->y, kIntersectionPriority, a, b, npos});
  }

  void on_leftmost(const VertexEvent& ve) {
    const std::size_t j = insertion_index(ve.at.y);
    close_trapezoid(j);
    const std::size_t old_region = intervals_[j].region;
    const std::size_t lo = ve.starting[0], hi = ve.starting[1];
    status_.insert(status_.begin() + static_cast<std::ptrdiff_t>(j), {lo, hi});
    const std::size_t fresh = new_region(covered_above(j, lo), true);
    intervals_.insert(intervals_.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                      {Interval{fresh, x_}, Interval{old_region, x_}});
    regions_[fresh].alive = 1;
    regions_[find(old_region)].alive += 1;
    for (std::size_t i = j; i <= j + 2; ++i) refresh_flag(i);
    if (j > 0) schedule(j - 1);
    schedule(j + 1);
  }

  void on_rightmost(const VertexEvent& ve) {
    std::size_t p = position_of(ve.ending[0]);
    std::size_t q = position_of(ve.ending[1]);
    if (p > q) std::swap(p, q);
    if (q != p + 1) throw Error(ErrorCode::DegeneracyUnresolved, "curves ending at one vertex are not adjacent");
    for (std::size_t i = p; i <= p + 2; ++i) close_trapezoid(i);
    release(intervals_[p + 1].region);
    const std::size_t a = find(intervals_[p].region);
    const std::size_t b = find(intervals_[p + 2].region);
    if (a != b) {
      if (!(regions_[a].covered == regions_[b].covered))
        throw std::logic_error("merged regions carry different covered sets");
      const std::size_t keep = std::min(a, b), drop = std::max(a, b);
      Region& k = regions_[keep];
      Region& d = regions_[drop];
      k.alive += d.alive;
      k.sink = k.sink && d.sink;
      k.sample_sum = k.sample_sum + d.sample_sum;
      k.sample_count += d.sample_count;
      if (d.best_score > k.best_score) {
        k.best_score = d.best_score;
        k.best = d.best;
      }
      d.parent = keep;
    }
    regions_[find(a)].alive -= 1;
    status_.erase(status_.begin() + static_cast<std::ptrdiff_t>(p), status_.begin() + static_cast<std::ptrdiff_t>(p) + 2);
    intervals_.erase(intervals_.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                     intervals_.begin() + static_cast<std::ptrdiff_t>(p) + 3);
    intervals_[p].since = x_;
    refresh_flag(p);
    if (p > 0) schedule(p - 1);
  }

  void on_pass(const VertexEvent& ve) {
    const std::size_t p = position_of(ve.ending[0]);
    close_trapezoid(p);
    close_trapezoid(p + 1);
    status_[p] = ve.starting[0];
    refresh_flag(p);
    refresh_flag(p + 1);
    if (p > 0) schedule(p - 1);
    schedule(p);
  }

  bool on_intersection(std::size_t a, std::size_t b) {
    const std::size_t pa = position_of(a), pb = position_of(b);
    const std::size_t lo = std::min(pa, pb);
    if (std::max(pa, pb) != lo + 1) return false;  // stale
    for (std::size_t i = lo; i <= lo + 2; ++i) close_trapezoid(i);
    release(intervals_[lo + 1].region);
    std::swap(status_[lo], status_[lo + 1]);
    const std::size_t fresh = new_region(covered_above(lo, status_[lo]), true);
    intervals_[lo + 1] = Interval{fresh, x_};
    regions_[fresh].alive = 1;
    for (std::size_t i = lo; i <= lo + 2; ++i) refresh_flag(i);
    if (lo > 0) schedule(lo - 1);
    schedule(lo);  // two arcs may cross twice
    schedule(lo + 1);
    return true;
  }

#ifdef GEOCOVER_SWEEP_DEBUG
  void debug_check(double next_x) const {
    const double xm = 0.5 * (x_ + next_x);
    if (!std::isfinite(xm)) return;
    for (std::size_t i = 1; i < status_.size(); ++i)
      if (family_.y_at(status_[i - 1], xm) > family_.y_at(status_[i], xm) + 1e-12)
        std::fprintf(stderr, "order broken between x=%.17g and %.17g at %zu: curves %zu %zu\n", x_, next_x, i,
                     status_[i - 1], status_[i]);
  }
#endif

  const F& family_;
  WitnessRule rule_;
  Tolerance tol_;
  SweepResult result_;
  std::vector<std::size_t> status_;
  std::vector<Interval> intervals_;
  std::vector<Region> regions_;
  std::set<Event> queue_;
  std::unordered_set<IndexSet, IndexSetHash> seen_sets_;
  std::vector<Point> scratch_;
  double x_ = 0.0;
  double y_ = 0.0;
};

}  // namespace geocover
