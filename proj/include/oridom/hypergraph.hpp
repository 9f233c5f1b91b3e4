#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oridom/errors.hpp"
#include "oridom/vertex_set.hpp"

namespace oridom {

/// Vertex universe 0..n-1 with a multiset of nonempty edges.
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  /// k when every edge has exactly k vertices; nullopt otherwise (or no edges).
  std::optional<int> uniformity() const {
    if (edges.empty()) return std::nullopt;
    int k = edges.front().count();
    for (const auto& e : edges)
      if (e.count() != k) return std::nullopt;
    return k;
  }

  int min_edge_size() const {
    int k = n + 1;
    for (const auto& e : edges) k = std::min(k, e.count());
    return edges.empty() ? 0 : k;
  }

  VertexSet edge_union() const {
    VertexSet u;
    for (const auto& e : edges) u |= e;
    return u;
  }

  void validate() const {
    if (n < 0 || n > kMaxVertices) throw ParseError("hypergraph: vertex count out of range");
    for (const auto& e : edges) {
      if (e.empty()) throw ParseError("hypergraph: empty edge");
      if (!e.subset_of(VertexSet::range(n)))
        throw ParseError("hypergraph: edge vertex outside [0, n)");
    }
  }
};

/// "n m" header line, then m lines each listing the vertices of one edge.
inline Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("hypergraph: missing 'n m' header");
  Hypergraph h;
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra)) throw ParseError("hypergraph: malformed 'n m' header");
  }
  if (n < 0 || n > kMaxVertices || m < 0) throw ParseError("hypergraph: header out of range");
  h.n = static_cast<int>(n);
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      throw ParseError("hypergraph: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    std::istringstream row(line);
    VertexSet e;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("hypergraph: bad vertex token '" + tok + "'");
      if (v < 0 || v >= n)
        throw ParseError("hypergraph: vertex " + tok + " outside [0, " + std::to_string(n) + ")");
      e.set(static_cast<int>(v));
    }
    if (e.empty()) throw ParseError("hypergraph: empty edge on line " + std::to_string(i + 2));
    h.edges.push_back(e);
  }
  if (next_line()) throw ParseError("hypergraph: trailing content after the declared edges");
  return h;
}

inline std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    bool first = true;
    e.for_each([&](int v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

}  // namespace oridom
