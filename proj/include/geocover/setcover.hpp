#pragma once

// Set cover over the canonical translates: greedy and an exact
// branch-and-bound for small instances.

#include <algorithm>
#include <string>
#include <vector>

#include "geocover/error.hpp"
#include "geocover/index_set.hpp"
#include "geocover/translate.hpp"

namespace geocover {

struct CoverInstance {
  std::size_t universe = 0;
  std::vector<IndexSet> sets;
  /// translate index of each set
  std::vector<std::size_t> source;
};

enum class SolverKind { Greedy, Exact };

inline std::string to_string(SolverKind k) { return k == SolverKind::Greedy ? "greedy" : "exact"; }

struct CoverSolution {
  std::vector<std::size_t> chosen;
  SolverKind solver = SolverKind::Greedy;

  std::size_t cardinality() const { return chosen.size(); }
};

inline CoverInstance to_cover_instance(const std::vector<CanonicalTranslate>& translates, std::size_t n) {
  CoverInstance inst;
  inst.universe = n;
  IndexSet all(n);
  for (std::size_t t = 0; t < translates.size(); ++t) {
    IndexSet s(n);
    for (auto i : translates[t].covered) {
      if (i >= n) throw Error(ErrorCode::UncoveredPoint, "covered index out of range");
      s.insert(i);
    }
    all |= s;
    inst.sets.push_back(std::move(s));
    inst.source.push_back(t);
  }
  if (all.count() != n) throw Error(ErrorCode::UncoveredPoint, "translates leave a point uncovered");
  return inst;
}

inline CoverInstance to_cover_instance(const std::vector<IndexSet>& sets, std::size_t n) {
  std::vector<CanonicalTranslate> ts;
  for (const auto& s : sets) ts.push_back(CanonicalTranslate{{}, s.to_vector()});
  return to_cover_instance(ts, n);
}

inline bool is_cover(const CoverInstance& inst, const CoverSolution& sol) {
  IndexSet u(inst.universe);
  for (auto c : sol.chosen) u |= inst.sets.at(c);
  return u.count() == inst.universe;
}

inline CoverSolution greedy_cover(const CoverInstance& inst) {
  CoverSolution sol;
  sol.solver = SolverKind::Greedy;
  IndexSet uncovered(inst.universe);
  for (std::size_t i = 0; i < inst.universe; ++i) uncovered.insert(i);
  while (!uncovered.empty()) {
    std::size_t best = inst.sets.size(), gain = 0;
    for (std::size_t s = 0; s < inst.sets.size(); ++s) {
      const std::size_t g = uncovered.count() - uncovered.count_without(inst.sets[s]);
      if (g > gain) {
        gain = g;
        best = s;
      }
    }
    if (best == inst.sets.size()) throw Error(ErrorCode::UncoveredPoint, "no set covers a remaining point");
    sol.chosen.push_back(best);
    uncovered.subtract(inst.sets[best]);
  }
  return sol;
}

namespace detail {

class BranchAndBound {
 public:
  explicit BranchAndBound(const CoverInstance& inst) : inst_(inst) {
    for (const auto& s : inst.sets) max_size_ = std::max(max_size_, s.count());
    containing_.resize(inst.universe);
    for (std::size_t s = 0; s < inst.sets.size(); ++s)
      for (auto e : inst.sets[s].to_vector()) containing_[e].push_back(s);
  }

  std::vector<std::size_t> solve(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    IndexSet uncovered(inst_.universe);
    for (std::size_t i = 0; i < inst_.universe; ++i) uncovered.insert(i);
    std::vector<std::size_t> path;
    search(uncovered, path);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(const IndexSet& uncovered, std::vector<std::size_t>& path) {
    const std::size_t left = uncovered.count();
    if (left == 0) {
      if (path.size() < best_.size()) best_ = path;
      return;
    }
    const std::size_t lower = path.size() + (left + max_size_ - 1) / max_size_;
    if (lower >= best_.size()) return;
    std::size_t e = 0;
    while (!uncovered.contains(e)) ++e;
    for (auto s : containing_[e]) {
      IndexSet next = uncovered;
      next.subtract(inst_.sets[s]);
      path.push_back(s);
      search(next, path);
      path.pop_back();
    }
  }

  const CoverInstance& inst_;
  std::size_t max_size_ = 1;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// Minimum-cardinality cover; throws CapExceeded above `max_sets` sets.
inline CoverSolution exact_cover(const CoverInstance& inst, std::size_t max_sets = 25) {
  if (inst.sets.size() > max_sets) throw Error(ErrorCode::CapExceeded, "too many sets for the exact solver");
  CoverSolution sol;
  sol.solver = SolverKind::Exact;
  if (inst.universe == 0) return sol;
  sol.chosen = detail::BranchAndBound(inst).solve(greedy_cover(inst).chosen);
  return sol;
}

}  // namespace geocover
