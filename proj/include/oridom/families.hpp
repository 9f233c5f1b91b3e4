#pragma once

#include <vector>

#include "oridom/graph.hpp"

// Named graph families used by tests, the CLI and the tightness examples.
namespace oridom::families {

inline Graph empty(int n) { return Graph::from_edges(n, {}); }

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, std::move(e));
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, std::move(e));
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  if (n >= 3) e.push_back({0, n - 1});
  return Graph::from_edges(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph::from_edges(a + b, std::move(e));
}

/// K_{1,leaves}; the centre is vertex 0.
inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
    e.push_back({i, i + 5});
  }
  return Graph::from_edges(10, std::move(e));
}

inline Graph copies(const Graph& g, int count) {
  std::vector<Graph> parts(static_cast<std::size_t>(count), g);
  return disjoint_union(parts);
}

}  // namespace oridom::families
