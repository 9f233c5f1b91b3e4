#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "oridom/bounds.hpp"
#include "oridom/constructions.hpp"
#include "oridom/domination.hpp"
#include "oridom/invariants.hpp"
#include "oridom/multicover.hpp"
#include "oridom/orientation.hpp"

namespace oridom {

// ---------------------------------------------------------------------------
// Enumeration

/// Streams every completion of a partial orientation exactly once, in
/// lexicographic order of the direction bits of the free edges (earlier
/// canonical edges vary slowest, 0 before 1).
class OrientationEnumerator {
 public:
  OrientationEnumerator(const Graph& g, const std::vector<Arc>& fixed = {})
      : base_(std::make_shared<const Graph>(g)), dir_(static_cast<std::size_t>(g.size()), 0) {
    std::vector<char> is_fixed(static_cast<std::size_t>(g.size()), 0);
    for (const auto& a : fixed) {
      int e = g.edge_index(a.tail, a.head);
      if (e < 0)
        throw std::invalid_argument("enumerate_orientations: fixed arc " + std::to_string(a.tail) +
                                    "->" + std::to_string(a.head) + " is not an edge");
      if (is_fixed[e]) throw std::invalid_argument("enumerate_orientations: edge fixed twice");
      is_fixed[e] = 1;
      dir_[e] = a.tail > a.head;
    }
    for (int e = 0; e < g.size(); ++e)
      if (!is_fixed[e]) free_.push_back(e);
  }

  /// 2^(free edge count).
  std::uint64_t count() const {
    return free_.size() >= 64 ? std::numeric_limits<std::uint64_t>::max()
                              : std::uint64_t{1} << free_.size();
  }

  /// Advances to the next completion; false once the stream is exhausted.
  bool next(std::vector<std::uint8_t>& dir) {
    if (done_) return false;
    if (started_) {
      int i = static_cast<int>(free_.size()) - 1;
      while (i >= 0 && dir_[free_[i]]) dir_[free_[i--]] = 0;
      if (i < 0) {
        done_ = true;
        return false;
      }
      dir_[free_[i]] = 1;
    }
    started_ = true;
    dir = dir_;
    return true;
  }

  std::optional<Orientation> next() {
    std::vector<std::uint8_t> dir;
    if (!next(dir)) return std::nullopt;
    return Orientation(base_, std::move(dir));
  }

  const std::shared_ptr<const Graph>& base() const { return base_; }

 private:
  std::shared_ptr<const Graph> base_;
  std::vector<std::uint8_t> dir_;
  std::vector<int> free_;
  bool started_ = false;
  bool done_ = false;
};

inline std::vector<Orientation> enumerate_orientations(const Graph& g, const std::vector<Arc>& fixed = {}) {
  OrientationEnumerator it(g, fixed);
  std::vector<Orientation> out;
  while (auto d = it.next()) out.push_back(std::move(*d));
  return out;
}

// ---------------------------------------------------------------------------
// Hakimi orientation

/// Orientation with maximum out-degree at most ceil(mad(G)/2), by reversing
/// directed paths from overloaded vertices to underloaded ones.
inline Orientation hakimi_orientation(const Graph& g) {
  if (g.order() == 0) return Orientation::lowest_first(g);
  const long long target = oridom::ceil(max_average_degree(g).value / 2);
  auto base = std::make_shared<const Graph>(g);
  const int n = g.order();
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(g.size()), 0);
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) out[e.u].set(e.v);

  for (int v = 0; v < n; ++v) {
    while (out[v].count() > target) {
      std::vector<int> parent(static_cast<std::size_t>(n), -1);
      std::vector<int> queue{v};
      parent[v] = v;
      int found = -1;
      for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
        int u = queue[head];
        for (int w = out[u].first(); w >= 0; w = out[u].next(w)) {
          if (parent[w] >= 0) continue;
          parent[w] = u;
          if (out[w].count() < target) {
            found = w;
            break;
          }
          queue.push_back(w);
        }
      }
      if (found < 0)
        throw InvariantViolation("hakimi_orientation: no reversal path from vertex " + std::to_string(v) +
                                 " although max out-degree exceeds ceil(mad/2) = " + std::to_string(target));
      for (int w = found; w != v; w = parent[w]) {
        int u = parent[w];
        out[u].reset(w);
        out[w].set(u);
      }
    }
  }
  for (int i = 0; i < g.size(); ++i) dir[i] = out[g.edges()[i].v].test(g.edges()[i].u) ? 1 : 0;
  return Orientation(std::move(base), std::move(dir));
}

// ---------------------------------------------------------------------------
// Upper directed domination number

struct OrientationSearchOptions {
  std::uint64_t budget = kUnlimitedBudget;  // gamma(D)-solver node expansions
  int workers = 1;
};

struct GammaDResult {
  int value = 0;  // exact value, or the lower end of the interval
  int upper = 0;  // equals value when exact
  bool exact = true;
  Certificate witness;
  std::string closing_bound;  // upper bound met by the incumbent, when that ended the search
  std::uint64_t orientations_explored = 0;
  std::uint64_t nodes = 0;
};

/// Search-space split: the first kSplitBits direction bits are fixed per
/// subrange. The split is independent of the worker count so every count
/// and witness is identical for any number of workers.
inline constexpr int kSplitBits = 3;

namespace detail {

struct SubrangeResult {
  int best = 0;
  std::optional<std::vector<std::uint8_t>> direction;
  VertexSet witness;
  bool complete = true;
  bool hit_upper = false;
  bool cancelled = false;
  std::uint64_t leaves = 0;
  std::uint64_t nodes = 0;
};

/// Depth-first search over direction bits. A partial orientation whose
/// fixed arcs alone already admit a DDS of size <= incumbent is pruned:
/// adding arcs never increases gamma, so no completion can beat the incumbent.
template <class Set>
class UpperSearch {
 public:
  UpperSearch(const Graph& g, int incumbent, long long upper, std::uint64_t budget,
              const std::atomic<int>* lowest_hit, int index)
      : g_(g), upper_(upper), budget_(budget), lowest_hit_(lowest_hit), index_(index) {
    res_.best = incumbent;
    in_.assign(static_cast<std::size_t>(g.order()), Set{});
    dir_.assign(static_cast<std::size_t>(g.size()), 0);
  }

  SubrangeResult run(int prefix_bits, std::uint32_t prefix) {
    for (int i = 0; i < prefix_bits; ++i) {
      std::uint8_t bit = (prefix >> (prefix_bits - 1 - i)) & 1u;
      set_arc(i, bit);
    }
    search(prefix_bits);
    return std::move(res_);
  }

 private:
  void set_arc(int e, std::uint8_t bit) {
    const auto& edge = g_.edges()[e];
    dir_[e] = bit;
    if (bit)
      in_[edge.u].set(edge.v);
    else
      in_[edge.v].set(edge.u);
  }
  void clear_arc(int e) {
    const auto& edge = g_.edges()[e];
    in_[edge.u].reset(edge.v);
    in_[edge.v].reset(edge.u);
  }

  bool stop() const {
    return !res_.complete || res_.hit_upper || res_.cancelled;
  }

  void search(int level) {
    if (lowest_hit_ && lowest_hit_->load(std::memory_order_relaxed) < index_) {
      res_.cancelled = true;
      return;
    }
    MulticoverSolver<Set> solver(r_domination_demands(in_, 1));
    auto probe = solver.solve(res_.best + 1, budget_ - res_.nodes);
    res_.nodes += probe.nodes;
    if (!probe.complete) {
      res_.complete = false;
      return;
    }
    if (probe.best) return;  // every completion has gamma <= incumbent

    if (level == g_.size()) {
      ++res_.leaves;
      auto exact = solver.solve(g_.order() + 1, budget_ - res_.nodes);
      res_.nodes += exact.nodes;
      if (!exact.complete) {
        res_.complete = false;
        return;
      }
      res_.best = exact.best->count();
      res_.direction = dir_;
      res_.witness = convert_set<VertexSet>(*exact.best);
      if (res_.best >= upper_) res_.hit_upper = true;
      return;
    }
    for (std::uint8_t bit : {std::uint8_t{0}, std::uint8_t{1}}) {
      set_arc(level, bit);
      search(level + 1);
      clear_arc(level);
      if (stop()) return;
    }
  }

  const Graph& g_;
  long long upper_;
  std::uint64_t budget_;
  const std::atomic<int>* lowest_hit_;
  int index_;
  std::vector<Set> in_;
  std::vector<std::uint8_t> dir_;
  SubrangeResult res_;
};

}  // namespace detail

/// Gamma_d(G) = max over orientations D of gamma(D), with a witness.
///
/// The incumbent starts at the better of the independent-set orientation
/// (gamma = alpha) and the Hakimi orientation; the search ends as soon as the
/// incumbent meets the best certified upper bound. When the budget runs out
/// the result is the interval [incumbent, best upper bound], exact = false.
inline GammaDResult upper_directed_domination(const Graph& g, OrientationSearchOptions opt = {},
                                              std::optional<BoundsReport> bounds = std::nullopt) {
  if (!bounds) bounds = sandwich(g);
  auto [ub, ub_name] = best_upper(*bounds);

  GammaDResult res;
  res.witness = independent_set_orientation(g);
  {
    auto hk = hakimi_orientation(g);
    auto gh = gamma_directed(hk);
    if (gh.value > res.witness.claimed_gamma)
      res.witness = {hk, gh.value, gh.witness, ClaimKind::exact};
  }
  res.value = res.witness.claimed_gamma;
  res.upper = static_cast<int>(ub);
  if (res.value > ub)
    throw InvariantViolation("witness orientation has gamma " + std::to_string(res.value) +
                             " above certified upper bound " + ub_name + " = " + std::to_string(ub));
  if (res.value == ub) {
    res.closing_bound = ub_name;
    return res;
  }

  const int split = std::min(g.size(), kSplitBits);
  const int ranges = 1 << split;
  const std::uint64_t per_range =
      opt.budget == kUnlimitedBudget ? kUnlimitedBudget : (opt.budget + ranges - 1) / ranges;
  std::vector<detail::SubrangeResult> results(static_cast<std::size_t>(ranges));
  std::atomic<int> lowest_hit{ranges};
  std::atomic<int> next_range{0};
  const int seed_value = res.value;

  auto work = [&]() {
    while (true) {
      int idx = next_range.fetch_add(1);
      if (idx >= ranges) return;
      if (lowest_hit.load() < idx) {
        results[idx].cancelled = true;
        continue;
      }
      results[idx] = with_set_type(g.order(), [&](auto tag) {
        detail::UpperSearch<decltype(tag)> search(g, seed_value, ub, per_range, &lowest_hit, idx);
        return search.run(split, static_cast<std::uint32_t>(idx));
      });
      if (results[idx].hit_upper) {
        int cur = lowest_hit.load();
        while (idx < cur && !lowest_hit.compare_exchange_weak(cur, idx)) {
        }
      }
    }
  };
  const int workers = std::max(1, std::min(opt.workers, ranges));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  bool complete = true;
  const int last = std::min(lowest_hit.load(), ranges - 1);
  for (int idx = 0; idx <= last; ++idx) {
    const auto& r = results[idx];
    res.nodes += r.nodes;
    res.orientations_explored += r.leaves;
    complete = complete && r.complete;
    if (r.direction && r.best > res.value) {
      res.value = r.best;
      res.witness = {Orientation(res.witness.orientation.base_ptr(), *r.direction), r.best, r.witness,
                     ClaimKind::exact};
    }
  }
  if (res.value >= ub) {
    res.closing_bound = ub_name;
    complete = true;
  }
  res.exact = complete;
  if (complete) res.upper = res.value;
  return res;
}

/// gamma_d(G) = gamma(G), witnessed by the dominating-set orientation. With
/// `verify_exhaustively` (and at most kMaxVerifiedEdges edges) every
/// orientation is checked to have gamma(D) >= gamma(G).
inline constexpr int kMaxVerifiedEdges = 20;

inline GammaDResult lower_directed_domination(const Graph& g, bool verify_exhaustively = false) {
  GammaDResult res;
  res.witness = dominating_set_orientation(g);
  res.value = res.upper = res.witness.claimed_gamma;
  if (!verify_exhaustively) return res;
  if (g.size() > kMaxVerifiedEdges)
    throw std::length_error("lower_directed_domination: exhaustive check limited to " +
                            std::to_string(kMaxVerifiedEdges) + " edges");
  with_set_type(g.order(), [&](auto tag) {
    using Set = decltype(tag);
    OrientationEnumerator it(g);
    std::vector<std::uint8_t> dir;
    std::vector<Set> in(static_cast<std::size_t>(g.order()));
    while (it.next(dir)) {
      for (auto& s : in) s = Set{};
      for (int i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        if (dir[i])
          in[e.u].set(e.v);
        else
          in[e.v].set(e.u);
      }
      auto out = MulticoverSolver<Set>(r_domination_demands(in, 1)).solve(res.value);
      res.nodes += out.nodes;
      ++res.orientations_explored;
      if (out.best)
        throw InvariantViolation("orientation with gamma(D) < gamma(G) found; gamma_d != gamma");
    }
  });
  return res;
}

}  // namespace oridom
