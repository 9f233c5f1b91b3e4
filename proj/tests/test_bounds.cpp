#include <gtest/gtest.h>

#include <fstream>
#include <limits>

#include "support.hpp"

using namespace oridom;
using namespace oridom::testing;

namespace {

const BoundEntry& entry(const std::vector<BoundEntry>& list, const std::string& name) {
  for (const auto& e : list)
    if (e.name == name) return e;
  throw std::out_of_range(name);
}

double wide_sweep(double (*fn)(int, int, int), int n, int alpha, int k0, int step) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = k0; k <= 20 * n + 40; k += step) best = std::min(best, fn(n, k, alpha));
  return best;
}

}  // namespace

TEST(Bounds, PetersenSandwich) {
  auto r = sandwich(families::petersen());
  EXPECT_EQ(r.sandwich_lo, 4);
  EXPECT_EQ(r.sandwich_hi, 5);
  EXPECT_EQ(entry(r.lower, "independence").ceiled(), 4);
  EXPECT_EQ(entry(r.upper, "matching").floored(), 5);
  EXPECT_FALSE(entry(r.upper, "regular-class1").applicable);
}

TEST(Bounds, CycleSandwichIsTight) {
  auto r = sandwich(families::cycle(7));
  EXPECT_EQ(r.sandwich_lo, 4);
  EXPECT_EQ(r.sandwich_hi, 4);
  auto even = sandwich(families::cycle(8));
  EXPECT_EQ(even.sandwich_lo, 4);
  EXPECT_EQ(even.sandwich_hi, 4);
}

TEST(Bounds, Applicability) {
  auto empty = sandwich(families::empty(4));
  EXPECT_EQ(empty.sandwich_lo, 4);
  EXPECT_EQ(empty.sandwich_hi, 4);
  EXPECT_FALSE(entry(empty.lower, "diameter").applicable);
  auto k5 = sandwich(families::complete(5));
  EXPECT_TRUE(entry(k5.upper, "complete-erdos").applicable);
  EXPECT_TRUE(entry(k5.upper, "regular-dirac").applicable);
  auto c5 = families::cycle(5);
  EXPECT_FALSE(entry(upper_bounds(c5), "perfect").applicable);
  EXPECT_TRUE(entry(upper_bounds(c5, {true}), "perfect").applicable);
  EXPECT_TRUE(entry(upper_bounds(families::cycle(6)), "perfect").applicable);
  auto zero = sandwich(families::empty(0));
  EXPECT_EQ(zero.sandwich_lo, 0);
  EXPECT_EQ(zero.sandwich_hi, 0);
}

TEST(Bounds, RoundingGuard) {
  BoundEntry e;
  e.value = 3.0 - 1e-12;
  EXPECT_EQ(e.floored(), 3);
  e.value = 3.0 + 1e-12;
  EXPECT_EQ(e.ceiled(), 3);
  e.exact = Rational(7, 3);
  EXPECT_EQ(e.floored(), 2);
  EXPECT_EQ(e.ceiled(), 3);
}

TEST(Bounds, EmptySandwichIsReported) {
  auto in = compute_bound_inputs(families::cycle(6));
  in.alpha = 6;  // contradicts the matching bound
  EXPECT_THROW(sandwich(in), InvariantViolation);
}

TEST(Bounds, SweepsFindTheMinimum) {
  for (int n = 1; n <= 60; n += 3)
    for (int alpha = 1; alpha <= n; alpha += 2) {
      auto list = transversal_upper_bounds(n, alpha);
      EXPECT_DOUBLE_EQ(entry(list, "transversal-f").value, wide_sweep(transversal_f, n, alpha, 0, 1));
      EXPECT_DOUBLE_EQ(entry(list, "transversal-g").value, wide_sweep(transversal_g, n, alpha, 2, 2));
      EXPECT_DOUBLE_EQ(entry(list, "transversal-h").value, wide_sweep(transversal_h, n, alpha, 1, 2));
      for (int r = 1; r <= 3; ++r) {
        double best = std::numeric_limits<double>::infinity();
        for (int k = r; k <= 20 * n + 40; ++k) best = std::min(best, r_domination_term(n, alpha, r, k));
        EXPECT_DOUBLE_EQ(r_domination_upper_bound(n, alpha, r).value, best);
      }
    }
}

TEST(Bounds, SandwichContainsExactValue) {
  CounterRng rng(107);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng.below(8));
    auto g = random_graph(n, std::array{0.2, 0.5, 0.8}[t % 3], rng);
    if (g.size() > 14) continue;
    auto r = sandwich(g);
    int exact = bf_upper_gamma_d(g);
    EXPECT_LE(r.sandwich_lo, exact) << to_graph6(g);
    EXPECT_GE(r.sandwich_hi, exact) << to_graph6(g);
    for (const auto& e : r.lower)
      if (e.applicable) { EXPECT_LE(e.ceiled(), exact) << e.name << " " << to_graph6(g); }
    for (const auto& e : r.upper)
      if (e.applicable) { EXPECT_GE(e.floored(), exact) << e.name << " " << to_graph6(g); }
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(Bounds, CompleteGraphsWithinLogBracket) {
  for (int n = 2; n <= 6; ++n) {
    int exact = bf_upper_gamma_d(families::complete(n));
    auto r = sandwich(families::complete(n));
    EXPECT_LE(r.sandwich_lo, exact);
    EXPECT_GE(r.sandwich_hi, exact);
    EXPECT_LE(exact, std::log2(n + 1.0) + kRoundingGuard);
  }
}

TEST(Bounds, InputsMatchInvariants) {
  auto in = compute_bound_inputs(families::petersen());
  EXPECT_EQ(in.n, 10);
  EXPECT_EQ(in.m, 15);
  EXPECT_EQ(in.alpha, 4);
  EXPECT_EQ(in.matching, 5);
  EXPECT_EQ(in.chi, 3);
  EXPECT_EQ(in.chi_edge, 4);
  EXPECT_EQ(in.regularity, 3);
  EXPECT_EQ(in.diameter, 2);
  EXPECT_FALSE(in.class_one);
  EXPECT_EQ(in.mad, Rational(3));
}

TEST(Bounds, BipartiteSandwichCollapses) {
  std::ifstream f(fixture_root() / "bipartite" / "m_le14.g6");
  ASSERT_TRUE(f);
  for (const auto& g : read_graph6_stream(f)) {
    auto r = sandwich(g);
    int alpha = bf_alpha(g);
    EXPECT_EQ(r.sandwich_lo, alpha) << to_graph6(g);
    EXPECT_EQ(r.sandwich_hi, alpha) << to_graph6(g);
  }
}

TEST(Bounds, ColorPairsTightFamily) {
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= k + 4; ++n) {
      auto g = tightness_family(TightnessKind::empty_plus_clique, n, k);
      EXPECT_EQ(upper_directed_domination(g).value, n - k / 2);
      EXPECT_EQ(entry(upper_bounds(g), "color-pairs").floored(), n - k / 2);
    }
}

TEST(Bounds, ReportRecomputesFromInputs) {
  CounterRng rng(109);
  for (int t = 0; t < 60; ++t) {
    auto g = random_graph(1 + static_cast<int>(rng.below(12)), 0.4, rng);
    auto a = sandwich(g);
    auto b = sandwich(a.inputs);
    ASSERT_EQ(a.upper.size(), b.upper.size());
    for (std::size_t i = 0; i < a.upper.size(); ++i) {
      EXPECT_EQ(a.upper[i].value, b.upper[i].value);
      EXPECT_EQ(a.upper[i].applicable, b.upper[i].applicable);
    }
    for (std::size_t i = 0; i < a.lower.size(); ++i) EXPECT_EQ(a.lower[i].value, b.lower[i].value);
  }
}

TEST(Bounds, WorkedExamples) {
  auto p = sandwich(families::petersen());
  EXPECT_EQ(*entry(p.lower, "chromatic").exact, Rational(10, 3));
  EXPECT_EQ(*entry(p.lower, "mad-hakimi").exact, Rational(10, 3));
  EXPECT_EQ(*entry(p.lower, "diameter").exact, Rational(2));
  EXPECT_EQ(*entry(p.upper, "regular-vizing").exact, Rational(25, 4));
  EXPECT_EQ(*entry(p.upper, "indep-color").exact, Rational(8));
  EXPECT_EQ(*entry(p.upper, "gallai-milgram").exact, Rational(7));
  EXPECT_EQ(*entry(p.upper, "color-pairs").exact, Rational(9));
  EXPECT_NEAR(closed_form_f(100, 10), std::sqrt(2000.0) * (std::log(std::sqrt(20.0)) + 2) - 20, 1e-12);
  auto two_triangles = upper_bounds(families::copies(families::complete(3), 2));
  EXPECT_EQ(entry(two_triangles, "indep-color").floored(), 4);
}
