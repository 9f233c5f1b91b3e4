#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oridom/domination.hpp"
#include "oridom/families.hpp"
#include "oridom/invariants.hpp"
#include "oridom/orientation.hpp"
#include "oridom/rng.hpp"

namespace oridom {

enum class ClaimKind { lower_bound_attainment, exact, property };

inline const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::lower_bound_attainment: return "lower-bound-attainment";
    case ClaimKind::exact: return "exact";
    case ClaimKind::property: return "property";
  }
  return "?";
}

/// A witness orientation with a claimed gamma(D) and a DDS of that size.
struct Certificate {
  Orientation orientation;
  int claimed_gamma = 0;
  VertexSet dds_witness;
  ClaimKind kind = ClaimKind::exact;
};

struct CertificateCheck {
  bool witness_valid = false;  // dds_witness is a DDS of the claimed size
  std::optional<int> solved;   // exact gamma(D) when the solver ran
  bool consistent = true;      // solver agrees with the claim

  bool ok() const { return witness_valid && consistent; }
};

/// Re-validates the witness; for exact claims also re-solves gamma(D) when
/// the order is at most `solve_up_to`.
inline CertificateCheck verify_certificate(const Certificate& c, int solve_up_to = 64) {
  CertificateCheck out;
  out.witness_valid = c.dds_witness.count() == c.claimed_gamma &&
                      is_directed_dominating(c.orientation, c.dds_witness);
  if (c.kind == ClaimKind::exact && c.orientation.order() <= solve_up_to) {
    out.solved = gamma_directed(c.orientation).value;
    out.consistent = *out.solved == c.claimed_gamma;
  }
  return out;
}

/// Edges with exactly one end in `source` point away from it; every other
/// edge points from its lower endpoint.
inline Orientation orientation_out_of(std::shared_ptr<const Graph> g, const VertexSet& source) {
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(g->size()), 0);
  for (int i = 0; i < g->size(); ++i) {
    const auto& e = g->edges()[i];
    if (source.test(e.v) && !source.test(e.u)) dir[i] = 1;
  }
  return Orientation(std::move(g), std::move(dir));
}

/// All [A, V \ A] edges leave a maximum independent set A; gamma(D) = alpha(G)
/// since every vertex of A has in-degree 0 and A dominates the rest.
inline Certificate independent_set_orientation(const Graph& g) {
  auto a = independence_number(g);
  auto base = std::make_shared<const Graph>(g);
  return {orientation_out_of(base, a.witness), a.value, a.witness, ClaimKind::exact};
}

/// All [S, V \ S] edges leave a minimum dominating set S; gamma(D) = gamma(G).
inline Certificate dominating_set_orientation(const Graph& g) {
  auto s = domination_number(g);
  auto base = std::make_shared<const Graph>(g);
  return {orientation_out_of(base, s.witness), s.value, s.witness, ClaimKind::exact};
}

/// Maximal outerplanar graph on n >= 4 vertices with an orientation whose
/// directed domination number is ceil(n/2).
///
/// Even n: directed cycle 0 -> 1 -> ... -> n-1 -> 0 plus arcs u -> 0 for
/// every u other than the hub's two cycle neighbours.
/// Odd n: label v_i = vertex i-1 on the directed cycle v_1 -> ... -> v_n -> v_1,
/// add v_i -> v_1 for odd i in [3, n-2] and v_1 -> v_i for even i in [4, n-1].
inline Certificate outerplanar_extremal(int n) {
  if (n < 4) throw std::invalid_argument("outerplanar_extremal: requires n >= 4");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  VertexSet witness;
  if (n % 2 == 0) {
    for (int u = 2; u <= n - 2; ++u) arcs.push_back({u, 0});
    for (int u = 1; u < n; u += 2) witness.set(u);
  } else {
    auto v = [](int i) { return i - 1; };
    for (int i = 3; i <= n - 2; i += 2) arcs.push_back({v(i), v(1)});
    for (int i = 4; i <= n - 1; i += 2) arcs.push_back({v(1), v(i)});
    witness.set(v(1));
    for (int i = 2; i <= n - 1; i += 2) witness.set(v(i));
  }
  return {Orientation::from_arcs(n, arcs), (n + 1) / 2, witness, ClaimKind::exact};
}

/// Extends an orientation of G[U] (U relabelled in increasing order) to G:
/// [U, V \ U] edges leave U, edges outside U point from the lower endpoint.
inline Orientation extend_orientation(const Graph& g, const std::vector<int>& subset,
                                      const Orientation& inner) {
  std::vector<int> u = subset;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (inner.base() != induced_subgraph(g, u))
    throw std::invalid_argument("extend_orientation: inner orientation is not on G[U]");
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < u.size(); ++i) local[u[i]] = static_cast<int>(i);
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(g.size()), 0);
  for (int i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    bool in_u = local[e.u] >= 0, in_v = local[e.v] >= 0;
    if (in_u && in_v) {
      dir[i] = inner.has_arc(local[e.v], local[e.u]) ? 1 : 0;
    } else if (in_v) {
      dir[i] = 1;
    }
  }
  return Orientation(g, std::move(dir));
}

enum class TightnessKind {
  disjoint_cliques,         // r K_t
  triangles_plus_isolated,  // r K_3 + s K_1
  empty_plus_clique,        // complement(K_{n-k}) + K_k
};

inline std::optional<TightnessKind> parse_tightness_kind(const std::string& s) {
  if (s == "disjoint-cliques") return TightnessKind::disjoint_cliques;
  if (s == "triangles-plus-isolated") return TightnessKind::triangles_plus_isolated;
  if (s == "empty-plus-clique") return TightnessKind::empty_plus_clique;
  return std::nullopt;
}

/// Parameters by kind: (r, t), (r, s), (n, k).
inline Graph tightness_family(TightnessKind kind, int a, int b) {
  switch (kind) {
    case TightnessKind::disjoint_cliques:
      if (a < 0 || b < 1) throw std::invalid_argument("disjoint-cliques: need r >= 0, t >= 1");
      return families::copies(families::complete(b), a);
    case TightnessKind::triangles_plus_isolated:
      if (a < 0 || b < 0) throw std::invalid_argument("triangles-plus-isolated: need r, s >= 0");
      return disjoint_union({families::copies(families::complete(3), a), families::empty(b)});
    case TightnessKind::empty_plus_clique:
      if (b < 0 || a < b) throw std::invalid_argument("empty-plus-clique: need 0 <= k <= n");
      return disjoint_union({families::empty(a - b), families::complete(b)});
  }
  throw std::invalid_argument("tightness_family: unknown kind");
}

/// Each pair {u, v} of K_n oriented by an independent fair coin.
inline Orientation random_tournament(int n, std::uint64_t seed) {
  auto g = std::make_shared<const Graph>(families::complete(n));
  CounterRng rng(seed);
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(g->size()));
  for (auto& d : dir) d = rng.coin() ? 1 : 0;
  return Orientation(std::move(g), std::move(dir));
}

/// i -> j iff j - i is a nonzero square mod p. Requires p prime, p = 3 mod 4.
inline Orientation quadratic_residue_tournament(int p) {
  auto is_prime = [](int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  if (!is_prime(p) || p % 4 != 3)
    throw std::invalid_argument("quadratic_residue_tournament: p must be a prime = 3 (mod 4)");
  std::vector<char> square(static_cast<std::size_t>(p), 0);
  for (int x = 1; x < p; ++x) square[(x * x) % p] = 1;
  std::vector<Arc> arcs;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      arcs.push_back(square[(j - i) % p] ? Arc{i, j} : Arc{j, i});
  return Orientation::from_arcs(p, arcs);
}

struct KDominationResult {
  bool holds = true;
  std::optional<std::vector<int>> failing_set;  // lexicographically first k-set with no dominator
};

/// Every k-subset S has a vertex u outside S with S inside N^+(u).
inline KDominationResult k_domination_property(const Orientation& d, int k) {
  const int n = d.order();
  if (!d.is_tournament()) throw std::invalid_argument("k_domination_property: not a tournament");
  if (k < 0 || k > n - 1) throw std::invalid_argument("k_domination_property: need 0 <= k <= n-1");
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s = make_set<VertexSet>(pick);
    bool dominated = false;
    for (int u = 0; u < n && !dominated; ++u)
      if (!s.test(u) && s.subset_of(d.out_neighbors(u))) dominated = true;
    if (!dominated) return {false, pick};
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {true, std::nullopt};
}

}  // namespace oridom
