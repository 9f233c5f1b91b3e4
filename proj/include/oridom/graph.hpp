#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <deque>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oridom/errors.hpp"
#include "oridom/vertex_set.hpp"

namespace oridom {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalises the edge list. Throws ParseError on an
  /// out-of-range endpoint, a loop or a repeated edge.
  static Graph from_edges(int n, std::vector<Edge> edges) {
    if (n < 0 || n > kMaxVertices)
      throw ParseError("vertex count " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxVertices) + "]");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw ParseError("edge " + describe(e) + " has an endpoint outside [0, " +
                         std::to_string(n) + ")");
      if (e.u == e.v) throw ParseError("loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (g.adj_[e.u].test(e.v)) throw ParseError("duplicate edge " + describe(e));
      g.adj_[e.u].set(e.v);
      g.adj_[e.v].set(e.u);
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    return g;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = adj_[v];
    s.set(v);
    return s;
  }
  int degree(int v) const { return adj_[v].count(); }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Canonical edge list: (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Position of uv in edges(), or -1 when uv is not an edge.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::string describe(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) out.push_back(c);
  }
  return out;
}

inline std::vector<long long> read_integers(std::string_view text, const char* what) {
  std::istringstream in(strip_comments(text));
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError(std::string(what) + ": expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

/// "n" followed by whitespace-separated "u v" pairs. '#' starts a comment.
inline Graph parse_edge_list(std::string_view text) {
  auto nums = detail::read_integers(text, "edge list");
  if (nums.empty()) throw ParseError("edge list: missing vertex count header");
  if (nums.size() % 2 == 0) throw ParseError("edge list: dangling vertex index");
  if (nums[0] < 0 || nums[0] > kMaxVertices)
    throw ParseError("edge list: vertex count out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < nums.size(); i += 2) {
    auto in_range = [&](long long x) { return x >= 0 && x < nums[0]; };
    if (!in_range(nums[i]) || !in_range(nums[i + 1]))
      throw ParseError("edge list: vertex index out of range in pair " +
                       std::to_string(nums[i]) + " " + std::to_string(nums[i + 1]));
    edges.push_back({static_cast<int>(nums[i]), static_cast<int>(nums[i + 1])});
  }
  return Graph::from_edges(static_cast<int>(nums[0]), std::move(edges));
}

inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw ParseError(std::string("graph6: character outside printable range: code ") +
                       std::to_string(static_cast<int>(static_cast<unsigned char>(c))));

  std::size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= line.size()) throw ParseError("graph6: truncated length header");
    return line[pos++] - 63;
  };
  long long n = take();
  if (n == 63) {
    if (pos < line.size() && line[pos] == 126) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds cap");

  const long long nbits = n * (n - 1) / 2;
  const long long nchars = (nbits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != nchars)
    throw ParseError("graph6: expected " + std::to_string(nchars) + " data bytes, got " +
                     std::to_string(line.size() - pos));

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  if (nbits % 6 != 0) {
    int last = line.back() - 63;
    int pad = static_cast<int>(6 - nbits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

/// One graph6 graph per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Composition

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph::from_edges(g.order(), std::move(edges));
}

/// G[S] with S relabelled 0..|S|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order())
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(s[i]) +
                              " not in graph");
    index[s[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  return Graph::from_edges(static_cast<int>(s.size()), std::move(edges));
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
  return induced_subgraph(g, subset.to_vector());
}

inline Graph disjoint_union(std::span<const Graph> parts) {
  long long total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > kMaxVertices)
    throw std::length_error("disjoint_union: total order " + std::to_string(total) +
                            " exceeds cap " + std::to_string(kMaxVertices));
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& e : p.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += p.order();
  }
  return Graph::from_edges(offset, std::move(edges));
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

// ---------------------------------------------------------------------------
// Structure

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sequence;  // indexed by vertex
  int regularity = -1;        // common degree, or -1 when irregular

  bool regular() const { return regularity >= 0; }
};

struct StructureReport {
  DegreeProfile degrees;
  int components = 0;
  std::vector<int> component_of;
  bool bipartite = true;
  std::vector<int> side;       // 2-colouring when bipartite
  std::vector<int> odd_cycle;  // closed walk v0..vk (v0 == vk) when not bipartite
  int diameter = 0;            // kInfiniteDiameter when disconnected

  bool connected() const { return components <= 1; }
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile d;
  d.sequence.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d.sequence[v] = g.degree(v);
  if (g.order() > 0) {
    auto [lo, hi] = std::minmax_element(d.sequence.begin(), d.sequence.end());
    d.min_degree = *lo;
    d.max_degree = *hi;
    if (*lo == *hi) d.regularity = *lo;
  } else {
    d.regularity = 0;
  }
  return d;
}

/// BFS distances from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

inline StructureReport structure(const Graph& g) {
  const int n = g.order();
  StructureReport r;
  r.degrees = degree_profile(g);
  r.component_of.assign(static_cast<std::size_t>(n), -1);
  r.side.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);

  for (int s = 0; s < n; ++s) {
    if (r.component_of[s] >= 0) continue;
    const int c = r.components++;
    std::deque<int> queue{s};
    r.component_of[s] = c;
    r.side[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](int w) {
        if (r.component_of[w] < 0) {
          r.component_of[w] = c;
          r.side[w] = 1 - r.side[u];
          parent[w] = u;
          queue.push_back(w);
        } else if (r.side[w] == r.side[u] && r.bipartite) {
          // Same-coloured edge: the two tree paths to the LCA close an odd cycle.
          r.bipartite = false;
          std::vector<int> pu{u}, pw{w};
          std::vector<char> on_u(static_cast<std::size_t>(n), 0);
          for (int x = u; parent[x] >= 0; x = parent[x]) pu.push_back(parent[x]);
          for (int x : pu) on_u[x] = 1;
          for (int x = w; !on_u[x]; x = parent[x]) pw.push_back(parent[x]);
          int lca = pw.back();
          std::vector<int> cyc;
          for (int x : pu) {
            cyc.push_back(x);
            if (x == lca) break;
          }
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cyc.push_back(*it);
          cyc.push_back(u);
          r.odd_cycle = std::move(cyc);
        }
      });
    }
  }
  if (!r.bipartite) r.side.clear();

  if (r.components > 1) {
    r.diameter = kInfiniteDiameter;
  } else {
    for (int s = 0; s < n; ++s) {
      auto d = bfs_distances(g, s);
      r.diameter = std::max(r.diameter, *std::max_element(d.begin(), d.end()));
    }
  }
  return r;
}

}  // namespace oridom
