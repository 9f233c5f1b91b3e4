#pragma once

// Random instance generators and brute-force oracles shared by the tests.
// The oracles enumerate subsets directly and never call the library solvers.

#include <cstdint>
#include <functional>
#include <vector>

#include "oridom/oridom.hpp"

namespace oridom::testing {

inline Graph random_graph(int n, double p, CounterRng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Orientation random_orientation(const Graph& g, CounterRng& rng) {
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(g.size()));
  for (auto& d : dir) d = rng.coin() ? 1 : 0;
  return Orientation(g, std::move(dir));
}

/// m distinct k-subsets of [n] (fewer if C(n, k) < m).
inline Hypergraph random_uniform_hypergraph(int n, int k, int m, CounterRng& rng) {
  Hypergraph h;
  h.n = n;
  for (int attempt = 0; attempt < 50 * m && h.edge_count() < m; ++attempt) {
    VertexSet e;
    while (e.count() < k) e.set(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    if (std::find(h.edges.begin(), h.edges.end(), e) == h.edges.end()) h.edges.push_back(e);
  }
  return h;
}

inline std::uint32_t mask_of(const VertexSet& s) { return static_cast<std::uint32_t>(s.word(0)); }

inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(mask_of(g.closed_neighbors(v)));
  return out;
}

/// Smallest popcount over masks in [0, 2^n) satisfying `ok`.
inline int min_subset(int n, const std::function<bool(std::uint32_t)>& ok) {
  int best = n + 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int c = __builtin_popcount(s);
    if (c < best && ok(s)) best = c;
  }
  return best;
}

inline int max_subset(int n, const std::function<bool(std::uint32_t)>& ok) {
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int c = __builtin_popcount(s);
    if (c > best && ok(s)) best = c;
  }
  return best;
}

inline int bf_alpha(const Graph& g) {
  std::vector<std::uint32_t> nb;
  for (int v = 0; v < g.order(); ++v) nb.push_back(mask_of(g.neighbors(v)));
  return max_subset(g.order(), [&](std::uint32_t s) {
    for (int v = 0; v < g.order(); ++v)
      if ((s >> v & 1) && (nb[v] & s)) return false;
    return true;
  });
}

inline int bf_gamma(const Graph& g) {
  auto cl = closed_masks(g);
  return min_subset(g.order(), [&](std::uint32_t s) {
    for (auto m : cl)
      if (!(m & s)) return false;
    return true;
  });
}

/// gamma_r(D): every vertex outside S has at least r in-neighbours in S.
inline int bf_gamma_directed(const Orientation& d, int r = 1) {
  std::vector<std::uint32_t> in;
  for (int v = 0; v < d.order(); ++v) in.push_back(mask_of(d.in_neighbors(v)));
  return min_subset(d.order(), [&](std::uint32_t s) {
    for (int v = 0; v < d.order(); ++v)
      if (!(s >> v & 1) && __builtin_popcount(in[v] & s) < r) return false;
    return true;
  });
}

inline int bf_transversal(const Hypergraph& h, int r = 1) {
  return min_subset(h.n, [&](std::uint32_t s) {
    for (const auto& e : h.edges)
      if (__builtin_popcount(mask_of(e) & s) < r) return false;
    return true;
  });
}

/// Max over all orientations of the brute-force gamma(D).
inline int bf_upper_gamma_d(const Graph& g) {
  int best = 0;
  const int m = g.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<std::uint8_t> dir(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) dir[i] = bits >> i & 1;
    best = std::max(best, bf_gamma_directed(Orientation(g, std::move(dir))));
  }
  return best;
}

inline int bf_lower_gamma_d(const Graph& g) {
  int best = g.order();
  const int m = g.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<std::uint8_t> dir(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) dir[i] = bits >> i & 1;
    best = std::min(best, bf_gamma_directed(Orientation(g, std::move(dir))));
  }
  return best;
}

inline Rational bf_mad(const Graph& g) {
  Rational best{0};
  const int n = g.order();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int e = 0;
    for (const auto& ed : g.edges())
      if ((s >> ed.u & 1) && (s >> ed.v & 1)) ++e;
    Rational avg(2 * e, __builtin_popcount(s));
    if (avg > best) best = avg;
  }
  return best;
}

inline int bf_matching(const Graph& g) {
  const int m = g.size();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    int c = __builtin_popcount(s);
    if (c <= best) continue;
    std::uint64_t used = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      if (s >> i & 1) {
        auto e = g.edges()[i];
        if ((used >> e.u & 1) || (used >> e.v & 1)) ok = false;
        used |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
      }
    if (ok) best = c;
  }
  return best;
}

/// Smallest k admitting a proper colouring, by trying every assignment.
inline int bf_chromatic(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    while (true) {
      bool ok = true;
      for (const auto& e : g.edges())
        if (col[e.u] == col[e.v]) {
          ok = false;
          break;
        }
      if (ok) return k;
      int i = 0;
      while (i < n && col[i] == k - 1) col[i++] = 0;
      if (i == n) break;
      ++col[i];
    }
  }
  return n;
}

/// Disjoint union of `count` random graphs is handy for component tests.
inline Graph random_graph_with_components(int parts, int n, double p, CounterRng& rng) {
  std::vector<Graph> gs;
  for (int i = 0; i < parts; ++i) gs.push_back(random_graph(n, p, rng));
  return disjoint_union(std::span<const Graph>(gs));
}

}  // namespace oridom::testing
