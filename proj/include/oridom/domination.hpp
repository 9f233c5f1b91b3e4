#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oridom/hypergraph.hpp"
#include "oridom/multicover.hpp"
#include "oridom/orientation.hpp"
#include "oridom/rng.hpp"

namespace oridom {

struct DominationResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
};

// ---------------------------------------------------------------------------
// Validators

/// Every vertex outside S has at least r in-neighbours in S.
inline bool is_r_dominating(const Orientation& d, const VertexSet& s, int r = 1) {
  for (int v = 0; v < d.order(); ++v)
    if (!s.test(v) && (d.in_neighbors(v) & s).count() < r) return false;
  return true;
}

inline bool is_directed_dominating(const Orientation& d, const VertexSet& s) {
  return is_r_dominating(d, s, 1);
}

inline bool is_r_transversal(const Hypergraph& h, const VertexSet& t, int r = 1) {
  for (const auto& e : h.edges)
    if ((e & t).count() < r) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exact solvers

template <class Set>
std::vector<Demand<Set>> r_domination_demands(const std::vector<Set>& in_neighbors, int r) {
  std::vector<Demand<Set>> out;
  out.reserve(in_neighbors.size());
  for (int v = 0; v < static_cast<int>(in_neighbors.size()); ++v)
    out.push_back({in_neighbors[v], r, v});
  return out;
}

template <class Set>
std::vector<Set> in_neighborhoods(const Orientation& d) {
  std::vector<Set> out;
  out.reserve(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) out.push_back(convert_set<Set>(d.in_neighbors(v)));
  return out;
}

/// gamma_r(D): minimum S such that every vertex outside S has at least r
/// in-neighbours in S. r = 1 gives the directed domination number gamma(D).
inline DominationResult gamma_r_directed(const Orientation& d, int r) {
  if (r < 1) throw std::invalid_argument("gamma_r_directed: r must be >= 1");
  return with_set_type(d.order(), [&](auto tag) {
    using Set = decltype(tag);
    MulticoverSolver<Set> solver(r_domination_demands(in_neighborhoods<Set>(d), r));
    auto out = solver.solve(d.order() + 1);
    DominationResult res;
    res.value = out.best->count();
    res.witness = convert_set<VertexSet>(*out.best);
    res.nodes = out.nodes;
    return res;
  });
}

inline DominationResult gamma_directed(const Orientation& d) { return gamma_r_directed(d, 1); }

/// Oracle: scans vertex subsets by increasing size. Only for small orders.
inline DominationResult gamma_directed_bruteforce(const Orientation& d, int r = 1) {
  const int n = d.order();
  if (n > 24) throw std::length_error("gamma_directed_bruteforce: order above 24");
  std::vector<std::uint32_t> in(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) in[v] = static_cast<std::uint32_t>(d.in_neighbors(v).word(0));
  DominationResult best{n, VertexSet::range(n), 0};
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    int size = std::popcount(s);
    if (size >= best.value) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (!((s >> v) & 1u) && std::popcount(in[v] & s) < r) ok = false;
    if (ok) {
      best.value = size;
      best.witness = VertexSet{};
      for (int v = 0; v < n; ++v)
        if ((s >> v) & 1u) best.witness.set(v);
    }
  }
  return best;
}

/// Closed in-neighbourhood hypergraph: edge v is N^-[v].
inline Hypergraph cinh(const Orientation& d) {
  Hypergraph h;
  h.n = d.order();
  for (int v = 0; v < d.order(); ++v) h.edges.push_back(d.closed_in_neighbors(v));
  return h;
}

enum class TransversalMode { exact, randomized };

struct TransversalResult {
  VertexSet set;
  int size = 0;
  int r = 1;
  TransversalMode mode = TransversalMode::exact;
  std::optional<std::uint64_t> seed;
  bool feasible = true;
};

inline TransversalResult r_transversal_number(const Hypergraph& h, int r) {
  if (r < 1) throw std::invalid_argument("r_transversal_number: r must be >= 1");
  TransversalResult res;
  res.r = r;
  if (h.min_edge_size() < r && !h.edges.empty()) {
    res.feasible = false;
    return res;
  }
  with_set_type(h.n, [&](auto tag) {
    using Set = decltype(tag);
    std::vector<Demand<Set>> demands;
    for (const auto& e : h.edges) demands.push_back({convert_set<Set>(e), r, -1});
    MulticoverSolver<Set> solver(std::move(demands));
    auto out = solver.solve(h.n + 1);
    res.set = convert_set<VertexSet>(*out.best);
    res.size = out.best->count();
  });
  return res;
}

inline TransversalResult transversal_number(const Hypergraph& h) {
  return r_transversal_number(h, 1);
}

/// Random vertex sample at p = ln k / k, then each edge meeting the sample in
/// fewer than r vertices receives its lowest-index missing vertices.
inline TransversalResult randomized_r_transversal(const Hypergraph& h, int r, std::uint64_t seed) {
  auto k = h.uniformity();
  if (!k) throw std::invalid_argument("randomized_r_transversal: hypergraph is not uniform");
  if (*k < 2) throw std::invalid_argument("randomized_r_transversal: requires k >= 2");
  if (r < 1 || r > *k) throw std::invalid_argument("randomized_r_transversal: requires 1 <= r <= k");
  const double p = std::log(static_cast<double>(*k)) / *k;
  if (!(1.0 - p > 0.5))
    throw std::invalid_argument("randomized_r_transversal: 1 - ln k / k must exceed 1/2");

  CounterRng rng(seed);
  VertexSet picked;
  for (int v = 0; v < h.n; ++v)
    if (rng.bernoulli(p)) picked.set(v);
  VertexSet extra;
  for (const auto& e : h.edges) {
    int have = (e & picked).count();
    if (have >= r) continue;
    int missing = r - have;
    for (int v = (e - picked).first(); v >= 0 && missing > 0; v = (e - picked).next(v), --missing)
      extra.set(v);
  }
  TransversalResult res;
  res.set = picked | extra;
  res.size = res.set.count();
  res.r = r;
  res.mode = TransversalMode::randomized;
  res.seed = seed;
  return res;
}

// ---------------------------------------------------------------------------
// Path partitions

inline constexpr int kMaxPathPartitionOrder = 14;

/// Minimum partition of V(D) into vertex-disjoint directed paths, each path
/// listed tail to head. Exact subset dynamic programme.
inline std::vector<std::vector<int>> min_path_partition(const Orientation& d) {
  const int n = d.order();
  if (n > kMaxPathPartitionOrder)
    throw std::length_error("min_path_partition: order " + std::to_string(n) + " above " +
                            std::to_string(kMaxPathPartitionOrder));
  if (n == 0) return {};
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = static_cast<std::uint32_t>(d.out_neighbors(v).word(0));

  // ends[mask]: vertices v such that some directed path covers exactly mask and ends at v.
  std::vector<std::uint16_t> ends(full + 1, 0);
  for (int v = 0; v < n; ++v) ends[std::uint32_t{1} << v] = static_cast<std::uint16_t>(1u << v);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = out[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << w)] |= static_cast<std::uint16_t>(1u << w);
      }
    }
  }

  std::vector<std::uint8_t> best(full + 1, 0xff);
  std::vector<std::uint32_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    std::uint32_t rest = mask ^ low;
    // Enumerate sub = low | (subset of rest).
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      std::uint32_t sub = low | s;
      if (ends[sub] && best[mask ^ sub] + 1 < best[mask]) {
        best[mask] = static_cast<std::uint8_t>(best[mask ^ sub] + 1);
        choice[mask] = sub;
      }
      if (s == 0) break;
    }
  }

  std::vector<std::vector<int>> paths;
  for (std::uint32_t mask = full; mask;) {
    std::uint32_t sub = choice[mask];
    std::vector<int> path;
    std::uint32_t cur = sub;
    int v = std::countr_zero(static_cast<std::uint32_t>(ends[cur]));
    while (true) {
      path.push_back(v);
      std::uint32_t prev = cur ^ (1u << v);
      if (!prev) break;
      std::uint32_t cand = ends[prev];
      int u = -1;
      while (cand) {
        int x = std::countr_zero(cand);
        cand &= cand - 1;
        if ((out[x] >> v) & 1u) {
          u = x;
          break;
        }
      }
      cur = prev;
      v = u;
    }
    std::reverse(path.begin(), path.end());
    paths.push_back(std::move(path));
    mask ^= sub;
  }
  return paths;
}

}  // namespace oridom
