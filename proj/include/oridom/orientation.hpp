#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oridom/graph.hpp"

namespace oridom {

struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A direction for every edge of a shared base graph. Bit i refers to the
/// i-th canonical edge (u, v), u < v: 0 means u -> v, 1 means v -> u.
class Orientation {
 public:
  Orientation() : Orientation(std::make_shared<const Graph>(), {}) {}

  Orientation(std::shared_ptr<const Graph> base, std::vector<std::uint8_t> direction)
      : base_(std::move(base)), direction_(std::move(direction)) {
    if (static_cast<int>(direction_.size()) != base_->size())
      throw std::invalid_argument("orientation: direction vector length " +
                                  std::to_string(direction_.size()) + " != edge count " +
                                  std::to_string(base_->size()));
    rebuild();
  }

  Orientation(const Graph& base, std::vector<std::uint8_t> direction)
      : Orientation(std::make_shared<const Graph>(base), std::move(direction)) {}

  /// Every edge directed from its lower endpoint.
  static Orientation lowest_first(std::shared_ptr<const Graph> base) {
    std::vector<std::uint8_t> dir(static_cast<std::size_t>(base->size()), 0);
    return Orientation(std::move(base), std::move(dir));
  }
  static Orientation lowest_first(const Graph& base) {
    return lowest_first(std::make_shared<const Graph>(base));
  }

  /// Builds the underlying graph from the arcs. Throws ParseError on loops,
  /// out-of-range vertices or an edge listed twice (in either direction).
  static Orientation from_arcs(int n, const std::vector<Arc>& arcs) {
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const auto& a : arcs) edges.push_back({a.tail, a.head});
    auto g = std::make_shared<const Graph>(Graph::from_edges(n, edges));
    std::vector<std::uint8_t> dir(arcs.size(), 0);
    for (const auto& a : arcs) dir[g->edge_index(a.tail, a.head)] = a.tail > a.head;
    return Orientation(std::move(g), std::move(dir));
  }

  const Graph& base() const { return *base_; }
  const std::shared_ptr<const Graph>& base_ptr() const { return base_; }
  int order() const { return base_->order(); }
  const std::vector<std::uint8_t>& direction() const { return direction_; }

  Arc arc(int edge) const {
    const auto& e = base_->edges()[edge];
    return direction_[edge] ? Arc{e.v, e.u} : Arc{e.u, e.v};
  }
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(direction_.size());
    for (int i = 0; i < static_cast<int>(direction_.size()); ++i) out.push_back(arc(i));
    return out;
  }
  bool has_arc(int tail, int head) const { return out_[tail].test(head); }

  const VertexSet& out_neighbors(int v) const { return out_[v]; }
  const VertexSet& in_neighbors(int v) const { return in_[v]; }
  VertexSet closed_in_neighbors(int v) const {
    VertexSet s = in_[v];
    s.set(v);
    return s;
  }
  int out_degree(int v) const { return out_[v].count(); }
  int in_degree(int v) const { return in_[v].count(); }
  int max_out_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, out_degree(v));
    return d;
  }
  int max_in_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, in_degree(v));
    return d;
  }

  Orientation with_edge_reversed(int edge) const {
    auto dir = direction_;
    dir[edge] ^= 1;
    return Orientation(base_, std::move(dir));
  }
  Orientation reversed() const {
    auto dir = direction_;
    for (auto& d : dir) d ^= 1;
    return Orientation(base_, std::move(dir));
  }

  /// Tournament: the base graph is complete.
  bool is_tournament() const {
    const long long n = order();
    return base_->size() == n * (n - 1) / 2;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return *a.base_ == *b.base_ && a.direction_ == b.direction_;
  }

 private:
  void rebuild() {
    const int n = base_->order();
    out_.assign(static_cast<std::size_t>(n), VertexSet{});
    in_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (int i = 0; i < static_cast<int>(direction_.size()); ++i) {
      auto a = arc(i);
      out_[a.tail].set(a.head);
      in_[a.head].set(a.tail);
    }
  }

  std::shared_ptr<const Graph> base_;
  std::vector<std::uint8_t> direction_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Same text shape as the edge list, each pair read as tail -> head.
inline Orientation parse_arc_list(std::string_view text) {
  auto nums = detail::read_integers(text, "arc list");
  if (nums.empty()) throw ParseError("arc list: missing vertex count header");
  if (nums.size() % 2 == 0) throw ParseError("arc list: dangling vertex index");
  if (nums[0] < 0 || nums[0] > kMaxVertices) throw ParseError("arc list: vertex count out of range");
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i + 1 < nums.size(); i += 2) {
    if (nums[i] < 0 || nums[i] >= nums[0] || nums[i + 1] < 0 || nums[i + 1] >= nums[0])
      throw ParseError("arc list: vertex index out of range");
    arcs.push_back({static_cast<int>(nums[i]), static_cast<int>(nums[i + 1])});
  }
  return Orientation::from_arcs(static_cast<int>(nums[0]), arcs);
}

inline std::string format_arc_list(const Orientation& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

}  // namespace oridom
