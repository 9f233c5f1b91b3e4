#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "oridom/errors.hpp"
#include "oridom/graph.hpp"
#include "oridom/maxflow.hpp"
#include "oridom/multicover.hpp"

namespace oridom {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline long long floor(const Rational& q) {
  long long f = q.numerator() / q.denominator();
  if (f * q.denominator() > q.numerator()) --f;
  return f;
}

inline long long ceil(const Rational& q) {
  long long f = floor(q);
  return f * q.denominator() == q.numerator() ? f : f + 1;
}

/// An integer invariant realised by a vertex set (independent set, clique,
/// dominating set, vertex cover).
struct SetInvariant {
  int value = 0;
  VertexSet witness;
};

struct MatchingResult {
  int value = 0;
  std::vector<Edge> matching;
};

struct ColoringResult {
  int value = 0;
  std::vector<int> color;  // colour per vertex, 0-based
};

struct EdgeColoringResult {
  int value = 0;
  std::vector<int> color;  // colour per canonical edge
  bool class_one = true;
};

struct MadResult {
  Rational value{0};
  VertexSet witness;  // vertex set of a densest subgraph
};

// ---------------------------------------------------------------------------
// Independence number

namespace detail {

template <class Set>
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) {
    adj_.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj_.push_back(convert_set<Set>(g.neighbors(v)));
    n_ = g.order();
  }

  SetInvariant run() {
    Set current;
    best_size_ = -1;
    search(Set::range(n_), current);
    return {best_size_, convert_set<VertexSet>(best_)};
  }

 private:
  // Greedy partition of P into cliques; alpha(G[P]) is at most the part count.
  int clique_cover(Set p) const {
    int parts = 0;
    while (p.any()) {
      int v = p.first();
      Set cand = p & adj_[v];
      p.reset(v);
      while (cand.any()) {
        int u = cand.first();
        cand &= adj_[u];
        p.reset(u);
      }
      ++parts;
    }
    return parts;
  }

  void search(Set p, Set& current) {
    // Vertices of degree <= 1 inside P always belong to some maximum set.
    bool changed = true;
    Set added;
    while (changed && p.any()) {
      changed = false;
      for (int v = p.first(); v >= 0; v = p.next(v)) {
        if ((adj_[v] & p).count() <= 1) {
          added.set(v);
          p -= adj_[v];
          p.reset(v);
          changed = true;
        }
      }
    }
    current |= added;
    const int size = current.count();
    if (p.empty()) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
    } else if (size + clique_cover(p) > best_size_) {
      int pick = -1, pick_deg = -1;
      p.for_each([&](int v) {
        int d = (adj_[v] & p).count();
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      current.set(pick);
      search(p - adj_[pick] - Set{pick}, current);
      current.reset(pick);
      Set rest = p;
      rest.reset(pick);
      search(rest, current);
    }
    current -= added;
  }

  int n_ = 0;
  std::vector<Set> adj_;
  Set best_;
  int best_size_ = -1;
};

}  // namespace detail

/// alpha(G) with a maximum independent set.
inline SetInvariant independence_number(const Graph& g) {
  return with_set_type(g.order(), [&](auto tag) {
    return detail::IndependentSetSearch<decltype(tag)>(g).run();
  });
}

/// omega(G) = alpha(complement of G), witness is a maximum clique.
inline SetInvariant clique_number(const Graph& g) { return independence_number(complement(g)); }

/// beta(G) = n - alpha(G); the witness is the complement of a maximum independent set.
inline SetInvariant vertex_cover_number(const Graph& g) {
  auto a = independence_number(g);
  return {g.order() - a.value, g.vertices() - a.witness};
}

// ---------------------------------------------------------------------------
// Domination number

inline SetInvariant domination_number(const Graph& g) {
  if (g.order() == 0) return {0, {}};
  return with_set_type(g.order(), [&](auto tag) {
    using Set = decltype(tag);
    std::vector<Demand<Set>> demands;
    for (int v = 0; v < g.order(); ++v) demands.push_back({convert_set<Set>(g.neighbors(v)), 1, v});
    auto out = MulticoverSolver<Set>(std::move(demands)).solve(g.order() + 1);
    return SetInvariant{out.best->count(), convert_set<VertexSet>(*out.best)};
  });
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
  for (int v = 0; v < g.order(); ++v)
    if (!s.test(v) && !g.neighbors(v).intersects(s)) return false;
  return true;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

// ---------------------------------------------------------------------------
// Matching number (Edmonds' blossom algorithm)

inline MatchingResult matching_number(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).to_vector();

  std::vector<int> match(static_cast<std::size_t>(n), -1), parent, base;
  std::vector<char> used, blossom;

  for (const auto& e : g.edges())
    if (match[e.u] < 0 && match[e.v] < 0) {
      match[e.u] = e.v;
      match[e.v] = e.u;
    }

  auto lca = [&](int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    used.assign(static_cast<std::size_t>(n), 0);
    parent.assign(static_cast<std::size_t>(n), -1);
    base.resize(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          int cur = lca(v, to);
          blossom.assign(static_cast<std::size_t>(n), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  for (int root = 0; root < n; ++root) {
    if (match[root] >= 0) continue;
    int v = find_path(root);
    while (v >= 0) {
      int pv = parent[v];
      int ppv = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = ppv;
    }
  }

  MatchingResult res;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) res.matching.push_back({v, match[v]});
  res.value = static_cast<int>(res.matching.size());
  return res;
}

// ---------------------------------------------------------------------------
// Vertex colouring (DSATUR branch and bound on adjacency lists)

namespace detail {

class DsaturColoring {
 public:
  explicit DsaturColoring(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}

  /// A proper colouring with at most k colours, or nullopt.
  std::optional<std::vector<int>> colorable(int k) {
    const int n = static_cast<int>(adj_.size());
    color_.assign(static_cast<std::size_t>(n), -1);
    forbidden_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k), 0));
    sat_.assign(static_cast<std::size_t>(n), 0);
    k_ = k;
    if (n == 0) return color_;
    if (k == 0) return std::nullopt;
    if (assign(0, 0)) return color_;
    return std::nullopt;
  }

  /// Colour count of a greedy DSATUR pass; an upper bound for chi.
  int greedy_upper() {
    const int n = static_cast<int>(adj_.size());
    std::vector<int> col(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    int used = 0;
    for (int step = 0; step < n; ++step) {
      int pick = -1, best_sat = -1, best_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (col[v] >= 0) continue;
        int sat = static_cast<int>(std::count(seen[v].begin(), seen[v].end(), 1));
        int deg = static_cast<int>(adj_[v].size());
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
          pick = v;
          best_sat = sat;
          best_deg = deg;
        }
      }
      int c = 0;
      while (c < static_cast<int>(seen[pick].size()) && seen[pick][c]) ++c;
      col[pick] = c;
      used = std::max(used, c + 1);
      for (int w : adj_[pick]) {
        if (static_cast<int>(seen[w].size()) <= c) seen[w].resize(static_cast<std::size_t>(c + 1), 0);
        seen[w][c] = 1;
      }
    }
    return used;
  }

 private:
  bool assign(int colored, int used) {
    const int n = static_cast<int>(adj_.size());
    if (colored == n) return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      int deg = static_cast<int>(adj_[v].size());
      if (sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat_[v];
        best_deg = deg;
      }
    }
    // Colours beyond `used` are interchangeable; only the first is tried.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_[pick][c]) continue;
      color_[pick] = c;
      for (int w : adj_[pick])
        if (forbidden_[w][c]++ == 0) ++sat_[w];
      bool ok = assign(colored + 1, std::max(used, c + 1));
      if (!ok)
        for (int w : adj_[pick])
          if (--forbidden_[w][c] == 0) --sat_[w];
      if (ok) return true;
      color_[pick] = -1;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> color_;
  std::vector<std::vector<int>> forbidden_;
  std::vector<int> sat_;
  int k_ = 0;
};

inline int greedy_clique_size(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = n > 0 ? 1 : 0;
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    std::vector<int> clique{s};
    std::vector<int> cand = adj[s];
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return adj[a].size() > adj[b].size() || (adj[a].size() == adj[b].size() && a < b); });
    for (int u : cand) {
      for (int w : adj[u]) mark[w] = 1;
      bool ok = std::all_of(clique.begin(), clique.end(), [&](int c) { return mark[c] != 0; });
      for (int w : adj[u]) mark[w] = 0;
      if (ok) clique.push_back(u);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

inline ColoringResult chromatic_number_of(std::vector<std::vector<int>> adj) {
  const int lower = greedy_clique_size(adj);
  DsaturColoring solver(std::move(adj));
  const int upper = solver.greedy_upper();
  for (int k = lower; k <= upper; ++k)
    if (auto col = solver.colorable(k)) return {k, *col};
  throw InvariantViolation("chromatic number search exceeded the greedy colour count");
}

}  // namespace detail

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).to_vector();
  return adj;
}

/// chi(G) with an optimal proper colouring.
inline ColoringResult chromatic_number(const Graph& g) {
  return detail::chromatic_number_of(adjacency_lists(g));
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
  for (const auto& e : g.edges())
    if (color[e.u] == color[e.v]) return false;
  return true;
}

/// chi'(G), decided inside the window {Delta, Delta + 1} by exact search on
/// the line graph.
inline EdgeColoringResult edge_chromatic_number(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) return {0, {}, true};
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<std::vector<int>> line(static_cast<std::size_t>(m));
  int delta = 0;
  for (const auto& inc : incident) {
    delta = std::max(delta, static_cast<int>(inc.size()));
    for (int a : inc)
      for (int b : inc)
        if (a != b) line[a].push_back(b);
  }
  for (auto& l : line) std::sort(l.begin(), l.end());
  detail::DsaturColoring solver(std::move(line));
  if (auto col = solver.colorable(delta)) return {delta, *col, true};
  if (auto col = solver.colorable(delta + 1)) return {delta + 1, *col, false};
  throw InvariantViolation("edge colouring with Delta + 1 colours not found (Vizing)");
}

// ---------------------------------------------------------------------------
// Maximum average degree

/// Edge count of G[S].
inline int induced_edge_count(const Graph& g, const VertexSet& s) {
  int twice = 0;
  s.for_each([&](int v) { twice += (g.neighbors(v) & s).count(); });
  return twice / 2;
}

namespace detail {

/// Maximises |E(S)| * den - |S| * num over vertex sets S via a project
/// selection min cut. Returns the maximising set and the optimum.
inline std::pair<VertexSet, std::int64_t> best_selection(const Graph& g, std::int64_t num,
                                                         std::int64_t den) {
  const int n = g.order();
  const int m = g.size();
  const int source = n + m, sink = n + m + 1;
  MaxFlow flow(n + m + 2);
  for (int i = 0; i < m; ++i) {
    flow.add_edge(source, n + i, den);
    flow.add_edge(n + i, g.edges()[i].u, MaxFlow::kInfinite);
    flow.add_edge(n + i, g.edges()[i].v, MaxFlow::kInfinite);
  }
  for (int v = 0; v < n; ++v) flow.add_edge(v, sink, num);
  const std::int64_t cut = flow.run(source, sink);
  auto side = flow.source_side(source);
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (side[v]) s.set(v);
  return {s, static_cast<std::int64_t>(m) * den - cut};
}

}  // namespace detail

/// mad(G) = max over subgraphs H of 2|E(H)|/|V(H)|, exact. Dinkelbach
/// iteration on the density ratio; every step is an integer min cut.
inline MadResult max_average_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("max_average_degree: empty vertex set");
  VertexSet best = g.vertices();
  Rational density(g.size(), g.order());
  while (true) {
    auto [s, gain] = detail::best_selection(g, density.numerator(), density.denominator());
    if (gain <= 0 || s.empty()) break;
    Rational next(induced_edge_count(g, s), s.count());
    if (next <= density) break;
    density = next;
    best = s;
  }
  return {density * 2, best};
}

}  // namespace oridom
