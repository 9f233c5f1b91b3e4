#include <gtest/gtest.h>

#include "support.hpp"

using namespace oridom;
using namespace oridom::testing;

TEST(Invariants, Petersen) {
  auto p = families::petersen();
  EXPECT_EQ(independence_number(p).value, 4);
  EXPECT_EQ(clique_number(p).value, 2);
  EXPECT_EQ(domination_number(p).value, 3);
  EXPECT_EQ(matching_number(p).value, 5);
  EXPECT_EQ(chromatic_number(p).value, 3);
  auto ec = edge_chromatic_number(p);
  EXPECT_EQ(ec.value, 4);
  EXPECT_FALSE(ec.class_one);
  EXPECT_EQ(max_average_degree(p).value, Rational(3));
}

TEST(Invariants, SmallFamilies) {
  EXPECT_EQ(independence_number(families::cycle(7)).value, 3);
  EXPECT_EQ(chromatic_number(families::cycle(7)).value, 3);
  EXPECT_EQ(chromatic_number(families::complete(5)).value, 5);
  EXPECT_EQ(edge_chromatic_number(families::complete(5)).value, 5);
  EXPECT_EQ(edge_chromatic_number(families::complete(4)).value, 3);
  EXPECT_EQ(matching_number(families::star(5)).value, 1);
  EXPECT_EQ(max_average_degree(families::star(5)).value, Rational(5, 3));
  EXPECT_EQ(independence_number(families::empty(0)).value, 0);
  EXPECT_EQ(chromatic_number(families::empty(3)).value, 1);
  EXPECT_EQ(edge_chromatic_number(families::empty(3)).value, 0);
  EXPECT_THROW(max_average_degree(families::empty(0)), std::invalid_argument);
}

TEST(Invariants, AgainstBruteForce) {
  CounterRng rng(101);
  for (int t = 0; t < 250; ++t) {
    int n = 1 + static_cast<int>(rng.below(11));
    double p = std::array{0.2, 0.5, 0.8}[t % 3];
    auto g = random_graph(n, p, rng);
    auto a = independence_number(g);
    EXPECT_EQ(a.value, bf_alpha(g));
    EXPECT_TRUE(is_independent(g, a.witness));
    EXPECT_EQ(a.witness.count(), a.value);

    auto d = domination_number(g);
    EXPECT_EQ(d.value, bf_gamma(g));
    EXPECT_TRUE(is_dominating(g, d.witness));

    auto w = clique_number(g);
    EXPECT_EQ(w.value, bf_alpha(complement(g)));

    EXPECT_EQ(vertex_cover_number(g).value, n - a.value);

    auto mad = max_average_degree(g);
    EXPECT_EQ(mad.value, bf_mad(g));
    int e = induced_edge_count(g, mad.witness);
    EXPECT_EQ(Rational(2 * e, std::max(1, mad.witness.count())), mad.value);

    if (n <= 8) {
      auto c = chromatic_number(g);
      EXPECT_EQ(c.value, bf_chromatic(g));
      EXPECT_TRUE(is_proper_coloring(g, c.color));
    }
  }
}

TEST(Matching, AgainstBruteForce) {
  CounterRng rng(202);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    auto g = random_graph(2 + static_cast<int>(rng.below(9)), 0.35, rng);
    if (g.size() > 14) continue;
    auto m = matching_number(g);
    EXPECT_EQ(m.value, bf_matching(g));
    std::vector<int> used(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : m.matching) {
      EXPECT_TRUE(g.adjacent(e.u, e.v));
      EXPECT_EQ(used[e.u]++, 0);
      EXPECT_EQ(used[e.v]++, 0);
    }
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Matching, OddCyclesNeedBlossoms) {
  // Two triangles joined by a path: greedy augmenting without blossom
  // shrinking misses the perfect matching.
  auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_EQ(matching_number(g).value, 3);
  EXPECT_EQ(matching_number(families::petersen()).value, 5);
  EXPECT_EQ(matching_number(families::cycle(9)).value, 4);
}

TEST(EdgeColoring, ProperAndWithinVizing) {
  CounterRng rng(303);
  for (int t = 0; t < 120; ++t) {
    auto g = random_graph(2 + static_cast<int>(rng.below(7)), 0.5, rng);
    auto ec = edge_chromatic_number(g);
    int delta = degree_profile(g).max_degree;
    EXPECT_GE(ec.value, delta);
    EXPECT_LE(ec.value, delta + 1);
    EXPECT_EQ(ec.class_one, ec.value == delta);
    for (int i = 0; i < g.size(); ++i)
      for (int j = i + 1; j < g.size(); ++j) {
        auto a = g.edges()[i], b = g.edges()[j];
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) { EXPECT_NE(ec.color[i], ec.color[j]); }
      }
  }
}

TEST(Mad, FlowMatchesSubsetsUpTo14) {
  CounterRng rng(404);
  for (int t = 0; t < 60; ++t) {
    int n = 10 + static_cast<int>(rng.below(5));
    auto g = random_graph(n, 0.3, rng);
    EXPECT_EQ(max_average_degree(g).value, bf_mad(g)) << to_graph6(g);
  }
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(oridom::floor(Rational(7, 2)), 3);
  EXPECT_EQ(oridom::ceil(Rational(7, 2)), 4);
  EXPECT_EQ(oridom::floor(Rational(-7, 2)), -4);
  EXPECT_EQ(oridom::ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(oridom::ceil(Rational(4)), 4);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
}
