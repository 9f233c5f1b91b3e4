#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "oridom/vertex_set.hpp"

namespace oridom {

/// One covering requirement: satisfied when `self` is chosen, or when at
/// least `need` members of `candidates` are chosen. `self < 0` means the
/// requirement can only be met through candidates (plain multicover).
template <class Set>
struct Demand {
  Set candidates;
  int need = 1;
  int self = -1;
};

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

template <class Set>
struct CoverOutcome {
  std::optional<Set> best;  // cheapest cover strictly below the limit, if any
  bool complete = true;     // false when the node budget ran out
  std::uint64_t nodes = 0;
};

/// Exact branch-and-bound for set multicover with optional self-satisfaction.
///
/// Branching picks the unsatisfied demand with the fewest remaining options
/// and tries each option in turn (options already tried are excluded from
/// later siblings). The bound is a greedy packing of unsatisfied demands with
/// pairwise disjoint option sets; each packed demand needs its own vertices.
template <class Set>
class MulticoverSolver {
 public:
  explicit MulticoverSolver(std::vector<Demand<Set>> demands) : demands_(std::move(demands)) {}

  /// Minimum-size cover of size < strict_upper, or no result when none exists.
  CoverOutcome<Set> solve(int strict_upper, std::uint64_t budget = kUnlimitedBudget,
                          Set forced = {}) {
    best_size_ = strict_upper;
    best_.reset();
    budget_ = budget;
    nodes_ = 0;
    aborted_ = false;
    Set excluded;
    if (forced.count() < best_size_) search(forced, excluded);
    return {best_, !aborted_, nodes_};
  }

 private:
  struct Open {
    int index;
    Set options;
    int cost;  // fewest extra vertices that could satisfy it
  };

  void search(Set& chosen, Set& excluded) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }

    open_scratch_.clear();
    for (int i = 0; i < static_cast<int>(demands_.size()); ++i) {
      const auto& d = demands_[i];
      if (d.self >= 0 && chosen.test(d.self)) continue;
      int have = (d.candidates & chosen).count();
      if (have >= d.need) continue;
      int deficit = d.need - have;
      Set options = d.candidates - excluded - chosen;
      bool self_open = d.self >= 0 && !excluded.test(d.self);
      if (!self_open && options.count() < deficit) return;  // infeasible
      if (self_open) options.set(d.self);
      open_scratch_.push_back({i, options, self_open ? 1 : deficit});
    }

    const int size = chosen.count();
    if (open_scratch_.empty()) {
      best_size_ = size;
      best_ = chosen;
      return;
    }

    auto open = open_scratch_;
    std::stable_sort(open.begin(), open.end(), [](const Open& a, const Open& b) {
      return a.options.count() < b.options.count();
    });

    int bound = 0;
    Set used;
    for (const auto& o : open)
      if (!o.options.intersects(used)) {
        used |= o.options;
        bound += o.cost;
      }
    if (size + std::max(bound, 1) >= best_size_) return;

    const Open& branch = open.front();
    const auto& demand = demands_[branch.index];

    // Options in order of how many open demands they touch, then index.
    std::vector<std::pair<int, int>> order;
    branch.options.for_each([&](int u) {
      int touch = 0;
      for (const auto& o : open)
        if (o.options.test(u)) ++touch;
      order.push_back({-touch, u});
    });
    std::sort(order.begin(), order.end());

    Set saved_excluded = excluded;
    int deficit = demand.need - (demand.candidates & chosen).count();
    for (auto [neg_touch, u] : order) {
      (void)neg_touch;
      chosen.set(u);
      search(chosen, excluded);
      chosen.reset(u);
      if (aborted_) break;
      excluded.set(u);
      bool self_open = demand.self >= 0 && !excluded.test(demand.self);
      if (!self_open && (demand.candidates - excluded - chosen).count() < deficit) break;
      if (chosen.count() + 1 >= best_size_) break;
    }
    excluded = saved_excluded;
  }

  std::vector<Demand<Set>> demands_;
  std::vector<Open> open_scratch_;
  std::optional<Set> best_;
  int best_size_ = 0;
  std::uint64_t budget_ = kUnlimitedBudget;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

/// Calls f with a default-constructed set type wide enough for n vertices.
template <class F>
decltype(auto) with_set_type(int n, F&& f) {
  if (n <= 64) return f(SmallSet{});
  return f(VertexSet{});
}

}  // namespace oridom
