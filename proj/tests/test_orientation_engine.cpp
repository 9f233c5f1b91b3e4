#include <gtest/gtest.h>

#include "support.hpp"

using namespace oridom;
using namespace oridom::testing;

TEST(UpperGammaD, KnownValues) {
  EXPECT_EQ(upper_directed_domination(families::cycle(4)).value, 2);
  EXPECT_EQ(upper_directed_domination(families::complete(2)).value, 1);
  EXPECT_EQ(upper_directed_domination(families::complete(3)).value, 2);
  EXPECT_EQ(upper_directed_domination(families::complete(4)).value, 2);
  EXPECT_EQ(upper_directed_domination(families::empty(5)).value, 5);
  EXPECT_EQ(upper_directed_domination(families::star(4)).value, 4);
  auto p = upper_directed_domination(families::petersen());
  EXPECT_TRUE(p.exact);
  EXPECT_EQ(p.value, 4);
}

TEST(UpperGammaD, WitnessReSolves) {
  auto r = upper_directed_domination(families::cycle(7));
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.witness.orientation.base(), families::cycle(7));
  EXPECT_EQ(gamma_directed(r.witness.orientation).value, r.value);
  EXPECT_TRUE(verify_certificate(r.witness).ok());
}

TEST(UpperGammaD, AgainstFullEnumeration) {
  CounterRng rng(53);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 150; ++t) {
    int n = 1 + static_cast<int>(rng.below(8));
    auto g = random_graph(n, std::array{0.2, 0.5, 0.8}[t % 3], rng);
    if (g.size() > 12) continue;
    auto r = upper_directed_domination(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.value, bf_upper_gamma_d(g)) << to_graph6(g);
    EXPECT_EQ(bf_gamma_directed(r.witness.orientation), r.value);
    ++checked;
  }
  EXPECT_EQ(checked, 150);
}

TEST(UpperGammaD, WorkerCountDoesNotChangeResult) {
  CounterRng rng(59);
  for (int t = 0; t < 30; ++t) {
    auto g = random_graph(9, 0.5, rng);
    auto a = upper_directed_domination(g, {kUnlimitedBudget, 1});
    auto b = upper_directed_domination(g, {kUnlimitedBudget, 4});
    auto c = upper_directed_domination(g, {kUnlimitedBudget, 8});
    for (const auto* x : {&b, &c}) {
      EXPECT_EQ(a.value, x->value);
      EXPECT_EQ(a.nodes, x->nodes);
      EXPECT_EQ(a.orientations_explored, x->orientations_explored);
      EXPECT_EQ(a.witness.orientation, x->witness.orientation);
      EXPECT_EQ(a.witness.dds_witness, x->witness.dds_witness);
    }
  }
}

TEST(UpperGammaD, BudgetGivesSoundInterval) {
  CounterRng rng(61);
  int inexact = 0;
  for (int t = 0; t < 40; ++t) {
    auto g = random_graph(8, 0.5, rng);
    if (g.size() > 16) continue;
    auto r = upper_directed_domination(g, {20, 1});
    int truth = bf_upper_gamma_d(g);
    EXPECT_LE(r.value, truth);
    EXPECT_GE(r.exact ? r.value : r.upper, truth);
    if (r.exact) { EXPECT_EQ(r.value, truth); }
    inexact += !r.exact;
  }
  EXPECT_GT(inexact, 0);
}

TEST(LowerGammaD, EqualsDominationNumber) {
  CounterRng rng(67);
  for (int t = 0; t < 80; ++t) {
    auto g = random_graph(1 + static_cast<int>(rng.below(7)), 0.5, rng);
    if (g.size() > 12) continue;
    auto r = lower_directed_domination(g, true);
    EXPECT_EQ(r.value, domination_number(g).value);
    EXPECT_EQ(r.value, bf_lower_gamma_d(g));
    EXPECT_TRUE(verify_certificate(r.witness).ok());
  }
  EXPECT_THROW(lower_directed_domination(families::complete(7), true), std::length_error);
}

TEST(Hakimi, OutDegreeBound) {
  CounterRng rng(71);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng.below(30));
    auto g = random_graph(n, std::array{0.1, 0.3, 0.6}[t % 3], rng);
    auto d = hakimi_orientation(g);
    EXPECT_EQ(d.base(), g);
    EXPECT_LE(d.max_out_degree(), oridom::ceil(max_average_degree(g).value / 2));
  }
}

TEST(Enumerator, CountsMatch) {
  OrientationEnumerator it(families::cycle(5));
  EXPECT_EQ(it.count(), 32u);
  std::uint64_t seen = 0;
  std::vector<std::uint8_t> dir;
  std::set<std::vector<std::uint8_t>> distinct;
  while (it.next(dir)) {
    ++seen;
    distinct.insert(dir);
  }
  EXPECT_EQ(seen, 32u);
  EXPECT_EQ(distinct.size(), 32u);
}
