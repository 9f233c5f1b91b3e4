#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace oridom {

/// Dinic's algorithm on an integer-capacity network.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  void add_edge(int from, int to, std::int64_t cap) {
    graph_[from].push_back({to, static_cast<int>(graph_[to].size()), cap});
    graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0});
  }

  std::int64_t run(int source, int sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
      iter_.assign(graph_.size(), 0);
      while (std::int64_t f = dfs(source, sink, kInfinite)) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from source in the residual network (after run()).
  std::vector<char> source_side(int source) const {
    std::vector<char> seen(graph_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : graph_[u])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
  };

  bool bfs(int source, int sink) {
    level_.assign(graph_.size(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& e : graph_[u])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(int u, int sink, std::int64_t pushed) {
    if (u == sink) return pushed;
    for (auto& i = iter_[u]; i < graph_[u].size(); ++i) {
      Arc& e = graph_[u][i];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      if (std::int64_t f = dfs(e.to, sink, std::min(pushed, e.cap))) {
        e.cap -= f;
        graph_[e.to][e.rev].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace oridom
