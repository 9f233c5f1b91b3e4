#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "oridom/graph.hpp"
#include "oridom/orientation_engine.hpp"

namespace oridom {

inline constexpr int kMinOuterplanarOrder = 3;
inline constexpr int kMaxOuterplanarOrder = 14;

/// Calls `emit` once per triangulation of the convex n-gon 0..n-1 (outer
/// cycle plus chords). Labeled: Catalan(n-2) graphs, isomorphic copies kept.
inline void enumerate_maximal_outerplanar(int n, const std::function<void(const Graph&)>& emit) {
  if (n < kMinOuterplanarOrder || n > kMaxOuterplanarOrder)
    throw std::out_of_range("enumerate_maximal_outerplanar: n must lie in [3, 14]");
  std::vector<Edge> chords;
  std::function<void(int, int, const std::function<void()>&)> triangulate =
      [&](int i, int j, const std::function<void()>& then) {
        if (j - i < 2) {
          then();
          return;
        }
        for (int apex = i + 1; apex < j; ++apex) {
          std::size_t mark = chords.size();
          if (apex - i >= 2) chords.push_back({i, apex});
          if (j - apex >= 2) chords.push_back({apex, j});
          triangulate(i, apex, [&]() { triangulate(apex, j, then); });
          chords.resize(mark);
        }
      };
  triangulate(0, n - 1, [&]() {
    std::vector<Edge> edges = chords;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    emit(Graph::from_edges(n, std::move(edges)));
  });
}

inline std::vector<Graph> maximal_outerplanar_graphs(int n) {
  std::vector<Graph> out;
  enumerate_maximal_outerplanar(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

struct FamilyStats {
  std::string family;
  int n = 0;
  std::optional<int> r;
  int min_gamma_d = 0;
  int max_gamma_d = 0;
  std::string argmin;  // graph6
  std::string argmax;  // graph6
  std::uint64_t count = 0;
  bool min_exact = true;
  bool max_exact = true;
};

struct FamilyOptions {
  std::uint64_t budget = kUnlimitedBudget;  // per graph
  int workers = 1;
  std::size_t batch = 1024;
};

/// Running min/max of Gamma_d over a graph stream. A graph that exceeds the
/// budget contributes its interval conservatively: its upper end to the
/// minimum and its lower end to the maximum, and clears the exact flag.
class FamilyAccumulator {
 public:
  FamilyAccumulator(std::string family, FamilyOptions opt = {}) : opt_(opt) {
    stats_.family = std::move(family);
  }

  void add(const Graph& g) {
    pending_.push_back(g);
    if (pending_.size() >= opt_.batch) flush();
  }

  FamilyStats finish() {
    flush();
    return stats_;
  }

 private:
  void flush() {
    if (pending_.empty()) return;
    std::vector<GammaDResult> solved(pending_.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (std::size_t i = next.fetch_add(1); i < pending_.size(); i = next.fetch_add(1))
        solved[i] = upper_directed_domination(pending_[i], {opt_.budget, 1});
    };
    const int workers = std::max(1, opt_.workers);
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (std::size_t i = 0; i < pending_.size(); ++i) fold(pending_[i], solved[i]);
    pending_.clear();
  }

  void fold(const Graph& g, const GammaDResult& res) {
    const int lo = res.value, hi = res.exact ? res.value : res.upper;
    if (stats_.count == 0) stats_.n = g.order();
    if (stats_.count == 0 || hi < stats_.min_gamma_d) {
      stats_.min_gamma_d = hi;
      stats_.argmin = to_graph6(g);
    }
    if (stats_.count == 0 || lo > stats_.max_gamma_d) {
      stats_.max_gamma_d = lo;
      stats_.argmax = to_graph6(g);
    }
    if (!res.exact) stats_.min_exact = stats_.max_exact = false;
    ++stats_.count;
  }

  FamilyOptions opt_;
  FamilyStats stats_;
  std::vector<Graph> pending_;
};

inline FamilyStats family_stats(const std::vector<Graph>& graphs, const std::string& family,
                                const std::function<bool(const Graph&)>& filter = {},
                                FamilyOptions opt = {}) {
  FamilyAccumulator acc(family, opt);
  for (const auto& g : graphs)
    if (!filter || filter(g)) acc.add(g);
  return acc.finish();
}

inline FamilyStats outerplanar_family_stats(int n, FamilyOptions opt = {}) {
  FamilyAccumulator acc("maximal-outerplanar", opt);
  enumerate_maximal_outerplanar(n, [&](const Graph& g) { acc.add(g); });
  auto s = acc.finish();
  s.n = n;
  return s;
}

// ---------------------------------------------------------------------------
// Regular-graph fixtures and the conjecture table

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#ifndef ORIDOM_DEFAULT_FIXTURES
#define ORIDOM_DEFAULT_FIXTURES "fixtures"
#endif

/// $ORIDOM_FIXTURES when set, otherwise the build-time default.
inline std::filesystem::path fixture_root() {
  if (const char* env = std::getenv("ORIDOM_FIXTURES"); env && *env) return env;
  return ORIDOM_DEFAULT_FIXTURES;
}

inline std::filesystem::path regular_fixture_path(int r, int n, const std::filesystem::path& root) {
  return root / "regular" / ("r" + std::to_string(r) + "_n" + std::to_string(n) + ".g6");
}

inline std::vector<Graph> load_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("missing fixture file " + path.string());
  return read_graph6_stream(in);
}

inline std::vector<Graph> load_regular_fixture(int r, int n, const std::filesystem::path& root = fixture_root()) {
  auto graphs = load_graph6_file(regular_fixture_path(r, n, root));
  for (const auto& g : graphs) {
    auto d = degree_profile(g);
    if (g.order() != n || d.regularity != r)
      throw FixtureError("fixture " + regular_fixture_path(r, n, root).string() + " contains a graph that is not " +
                         std::to_string(r) + "-regular of order " + std::to_string(n));
  }
  return graphs;
}

struct ConjectureRow {
  int n = 0;
  int r = 0;
  FamilyStats stats;
  Rational half_n{0};
  std::optional<Rational> eqm_upper;   // (r+2)/(r+1) * n/2, r >= 2
  bool eqm_holds = true;               // n/2 <= M(n,r) <= eqm_upper
  std::string conjecture1;             // "consistent" | "counterexample" | "n/a"
  Rational question1_ratio{0};         // m(n,r)(r+1)/n
  bool alpha_floor_holds = true;       // m(n,r) >= n/(r+1)
};

/// Every feasible (n, r) with 1 <= r <= 3, r < n <= max_n and n r even.
inline std::vector<ConjectureRow> conjecture_report(int max_n, const std::filesystem::path& root = fixture_root(),
                                                   FamilyOptions opt = {}) {
  std::vector<ConjectureRow> rows;
  for (int r = 1; r <= 3; ++r)
    for (int n = r + 1; n <= max_n; ++n) {
      if ((n * r) % 2) continue;
      ConjectureRow row;
      row.n = n;
      row.r = r;
      row.stats = family_stats(load_regular_fixture(r, n, root), "r-regular", {}, opt);
      row.stats.n = n;
      row.stats.r = r;
      row.half_n = Rational(n, 2);
      const Rational big_m(row.stats.max_gamma_d), small_m(row.stats.min_gamma_d);
      if (r >= 2) {
        row.eqm_upper = Rational(r + 2, r + 1) * row.half_n;
        row.eqm_holds = row.half_n <= big_m && big_m <= *row.eqm_upper;
      }
      if (r >= 3)
        row.conjecture1 = big_m == row.half_n ? "consistent" : "counterexample";
      else
        row.conjecture1 = "n/a";
      row.question1_ratio = small_m * (r + 1) / n;
      row.alpha_floor_holds = small_m >= Rational(n, r + 1);
      rows.push_back(row);
    }
  return rows;
}

}  // namespace oridom
