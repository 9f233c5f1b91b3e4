#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oridom/errors.hpp"
#include "oridom/graph.hpp"
#include "oridom/invariants.hpp"

namespace oridom {

/// Guard band applied when rounding transcendental bound values to integers:
/// lower bounds round up from x - eps, upper bounds round down from x + eps.
inline constexpr double kRoundingGuard = 1e-9;

struct BoundEntry {
  std::string name;
  bool applicable = true;
  double value = 0;               // meaningful only when applicable
  std::optional<Rational> exact;  // set when the value is rational
  std::string why;
  std::optional<int> argmin_k;    // minimising k for swept families

  /// Smallest integer >= value (lower bounds), with the guard band.
  long long ceiled() const {
    if (exact) return oridom::ceil(*exact);
    return static_cast<long long>(std::ceil(value - kRoundingGuard));
  }
  /// Largest integer <= value (upper bounds), with the guard band.
  long long floored() const {
    if (exact) return oridom::floor(*exact);
    return static_cast<long long>(std::floor(value + kRoundingGuard));
  }
};

/// Every invariant a bound formula consumes.
struct BoundInputs {
  int n = 0;
  int m = 0;
  int alpha = 0;
  int matching = 0;
  int gamma = 0;
  int chi = 0;
  int chi_edge = 0;
  int chi_complement = 0;
  int min_degree = 0;
  int max_degree = 0;
  int diameter = 0;  // kInfiniteDiameter when disconnected
  Rational mad{0};
  int regularity = -1;
  bool connected = true;
  bool bipartite = true;
  bool complete = false;
  bool class_one = true;
};

struct BoundsFlags {
  bool assert_perfect = false;
};

struct BoundsReport {
  std::vector<BoundEntry> lower;
  std::vector<BoundEntry> upper;
  long long sandwich_lo = 0;
  long long sandwich_hi = 0;
  BoundInputs inputs;
};

inline BoundInputs compute_bound_inputs(const Graph& g) {
  BoundInputs in;
  auto st = structure(g);
  in.n = g.order();
  in.m = g.size();
  in.min_degree = st.degrees.min_degree;
  in.max_degree = st.degrees.max_degree;
  in.regularity = st.degrees.regularity;
  in.connected = st.connected();
  in.bipartite = st.bipartite;
  in.diameter = st.diameter;
  in.complete = static_cast<long long>(in.m) * 2 == static_cast<long long>(in.n) * (in.n - 1);
  in.alpha = independence_number(g).value;
  in.matching = matching_number(g).value;
  in.gamma = domination_number(g).value;
  in.chi = chromatic_number(g).value;
  in.chi_complement = chromatic_number(complement(g)).value;
  auto ec = edge_chromatic_number(g);
  in.chi_edge = ec.value;
  in.class_one = ec.class_one;
  in.mad = in.n > 0 ? max_average_degree(g).value : Rational(0);
  return in;
}

namespace detail {

inline BoundEntry exact_entry(std::string name, Rational q, std::string why) {
  BoundEntry e;
  e.name = std::move(name);
  e.exact = q;
  e.value = boost::rational_cast<double>(q);
  e.why = std::move(why);
  return e;
}

inline BoundEntry real_entry(std::string name, double v, std::string why) {
  BoundEntry e;
  e.name = std::move(name);
  e.value = v;
  e.why = std::move(why);
  return e;
}

inline BoundEntry skipped(std::string name, std::string why) {
  BoundEntry e;
  e.name = std::move(name);
  e.applicable = false;
  e.why = std::move(why);
  return e;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }


}  // namespace detail

// ---------------------------------------------------------------------------
// Lower bounds

inline std::vector<BoundEntry> lower_bounds(const BoundInputs& in) {
  using detail::exact_entry;
  using detail::skipped;
  std::vector<BoundEntry> out;
  const int n = in.n;

  out.push_back(exact_entry("independence", Rational(in.alpha), "alpha(G)"));

  if (n > 0)
    out.push_back(exact_entry("chromatic", Rational(n, in.chi), "n / chi(G)"));
  else
    out.push_back(skipped("chromatic", "empty vertex set"));

  if (n > 0 && in.connected)
    out.push_back(exact_entry("diameter", Rational(detail::ceil_div(in.diameter + 1, 2)),
                              "ceil((diam(G) + 1) / 2), G connected"));
  else
    out.push_back(skipped("diameter", "disconnected graph: infinite diameter"));

  if (n > 0) {
    long long half_mad = oridom::ceil(in.mad / 2);
    out.push_back(exact_entry("mad-hakimi", Rational(n, half_mad + 1), "n / (ceil(mad(G)/2) + 1)"));
    long long half_delta = detail::ceil_div(in.max_degree, 2);
    out.push_back(exact_entry("max-degree", Rational(n, half_delta + 1), "n / (ceil(Delta(G)/2) + 1)"));
  } else {
    out.push_back(skipped("mad-hakimi", "empty vertex set"));
    out.push_back(skipped("max-degree", "empty vertex set"));
  }

  if (n >= 3) {
    double v = std::log2(static_cast<double>(n)) - 2 * std::log2(std::log2(static_cast<double>(n)));
    out.push_back(detail::real_entry("erdos-log", std::max(1.0, v),
                                     "max(1, log n - 2 log log n) via the complete graph"));
  } else {
    out.push_back(skipped("erdos-log", "n <= 2: log log n undefined or negative"));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transversal-based families

inline double transversal_f(int n, int k, int alpha) {
  return 2.0 * n * std::log(k + 2.0) / (k + 2.0) + (2.0 * k + 1) * alpha;
}
inline double transversal_g(int n, int k, int alpha) {
  return n * (k + 2.0) / (3.0 * k) + 2.0 * (2.0 * k + 1) * alpha / 3.0;
}
inline double transversal_h(int n, int k, int alpha) {
  return n * (k + 1.0) / (3.0 * k - 1) + 2.0 * k * (2.0 * k + 1) * alpha / (3.0 * k - 1);
}
inline double closed_form_f(int n, int alpha) {
  const double na = 2.0 * n * alpha;
  return std::sqrt(na) * (std::log(std::sqrt(2.0 * n / alpha)) + 2) - 2.0 * alpha;
}
inline double closed_form_g(int n, int alpha) {
  return (n + 2.0 * alpha + 4.0 * std::sqrt(2.0 * n * alpha)) / 3.0;
}
inline double closed_form_h(int n, int alpha) {
  const double a = alpha;
  return (n + 14.0 / 3.0 * a + std::sqrt(2.0 * a) * (27.0 * n + 20.0 * a) / (3.0 * std::sqrt(5.0 * a + 6.0 * n))) / 3.0;
}

/// Swept minima of f (k >= 0), g (even k >= 2), h (odd k >= 1) over k <= n,
/// followed by the three closed forms.
inline std::vector<BoundEntry> transversal_upper_bounds(int n, int alpha) {
  std::vector<BoundEntry> out;
  if (n <= 0 || alpha <= 0) {
    for (const char* name : {"transversal-f", "transversal-g", "transversal-h", "transversal-f-closed",
                             "transversal-g-closed", "transversal-h-closed"})
      out.push_back(detail::skipped(name, "empty graph"));
    return out;
  }
  auto sweep = [&](const char* name, int k0, int step, auto fn, const char* why) {
    double best = std::numeric_limits<double>::infinity();
    int arg = k0;
    for (int k = k0; k <= std::max(n, k0); k += step) {
      double v = fn(n, k, alpha);
      if (v < best) {
        best = v;
        arg = k;
      }
    }
    auto e = detail::real_entry(name, best, why);
    e.argmin_k = arg;
    out.push_back(e);
  };
  sweep("transversal-f", 0, 1, transversal_f, "min over k >= 0 of 2n ln(k+2)/(k+2) + (2k+1) alpha");
  sweep("transversal-g", 2, 2, transversal_g, "min over even k >= 2 of n(k+2)/3k + 2(2k+1) alpha/3");
  sweep("transversal-h", 1, 2, transversal_h,
        "min over odd k >= 1 of n(k+1)/(3k-1) + 2k(2k+1) alpha/(3k-1)");
  out.push_back(detail::real_entry("transversal-f-closed", closed_form_f(n, alpha),
                                   "sqrt(2 n alpha)(ln sqrt(2n/alpha) + 2) - 2 alpha"));
  out.push_back(detail::real_entry("transversal-g-closed", closed_form_g(n, alpha),
                                   "(n + 2 alpha + 4 sqrt(2 n alpha)) / 3"));
  out.push_back(detail::real_entry("transversal-h-closed", closed_form_h(n, alpha),
                                   "(n + 14 alpha/3 + sqrt(2 alpha)(27n + 20 alpha)/(3 sqrt(5 alpha + 6n))) / 3"));
  return out;
}

// Transversal bounds for a k-uniform hypergraph with n vertices and m edges.
inline double alon_transversal_bound(int n, int m, int k) {
  return (m + n) * std::log(static_cast<double>(k)) / k;
}
inline Rational chvatal_mcdiarmid_bound(int n, int m, int k) {
  return Rational(n + static_cast<long long>(k / 2) * m, (3 * k) / 2);
}
/// Expected size of the randomized r-transversal.
inline double randomized_transversal_bound(int n, int m, int k, int r) {
  const double lk = std::log(static_cast<double>(k));
  return n * lk / k + r * m * std::pow(2 * lk, r) / k;
}

inline double r_domination_term(int n, int alpha, int r, int k) {
  const double k1 = k + 1.0;
  return (2.0 * k - 1) * alpha + n * std::log(k1) / k1 + r * n * std::pow(2.0 * std::log(k1), r) / k1;
}

struct RDominationBound {
  double value = 0;
  int k = 0;
};

/// Minimum over k in [r, max(n, r)] of the r-domination expression.
inline RDominationBound r_domination_upper_bound(int n, int alpha, int r) {
  if (r < 1) throw std::invalid_argument("r_domination_upper_bound: r must be >= 1");
  RDominationBound best{std::numeric_limits<double>::infinity(), r};
  for (int k = r; k <= std::max(n, r); ++k) {
    double v = r_domination_term(n, alpha, r, k);
    if (v < best.value) best = {v, k};
  }
  return best;
}

// ---------------------------------------------------------------------------
// Upper bounds

inline std::vector<BoundEntry> upper_bounds(const BoundInputs& in, BoundsFlags flags = {}) {
  using detail::exact_entry;
  using detail::real_entry;
  using detail::skipped;
  std::vector<BoundEntry> out;
  const int n = in.n;

  out.push_back(exact_entry("trivial", Rational(n), "n; equality iff G is edgeless"));
  out.push_back(exact_entry("matching", Rational(n - in.matching), "n - alpha'(G)"));
  if (n > 0 && 2 * in.matching == n)
    out.push_back(exact_entry("perfect-matching", Rational(n, 2), "n / 2, G has a perfect matching"));
  else
    out.push_back(skipped("perfect-matching", "no perfect matching"));
  if (n >= 2 * in.min_degree && n > 0)
    out.push_back(exact_entry("min-degree", Rational(n - in.min_degree), "n - delta(G), n >= 2 delta"));
  else
    out.push_back(skipped("min-degree", "requires n >= 2 delta"));

  if (n > 0) {
    out.push_back(exact_entry("indep-color", Rational(static_cast<long long>(in.alpha) * detail::ceil_div(in.chi, 2)),
                              "alpha(G) * ceil(chi(G)/2)"));
    out.push_back(exact_entry("color-pairs", Rational(n - in.chi / 2), "n - floor(chi(G)/2)"));
    out.push_back(exact_entry("gallai-milgram", Rational(n + in.alpha, 2), "(n + alpha(G)) / 2"));
    const long long t = in.chi_complement;
    out.push_back(real_entry("complement-color",
                             static_cast<double>(t) * std::log2(static_cast<double>(detail::ceil_div(n, t) + 1)),
                             "chi(co-G) * log(ceil(n / chi(co-G)) + 1)"));
  } else {
    for (const char* name : {"indep-color", "color-pairs", "gallai-milgram", "complement-color"})
      out.push_back(skipped(name, "empty vertex set"));
  }

  {
    std::optional<BoundEntry> best;
    for (int k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      if (static_cast<long long>(in.min_degree) * k < static_cast<long long>(k - 1) * n) continue;
      auto e = real_entry("dense", n * std::log2(k + 1.0) / k,
                          "n log(k+1) / k, k | n and delta >= (k-1) n / k");
      e.argmin_k = k;
      if (!best || e.value < best->value) best = e;
    }
    out.push_back(best ? *best : skipped("dense", "no divisor k of n with delta >= (k-1) n / k"));
  }

  const int r = in.regularity;
  if (n > 0 && r >= 2)
    out.push_back(exact_entry("regular-vizing", Rational(static_cast<long long>(n) * (r + 2), 2LL * (r + 1)),
                              "n (r+2) / 2(r+1), r-regular, r >= 2"));
  else
    out.push_back(skipped("regular-vizing", "requires an r-regular graph with r >= 2"));

  if (n > 0 && r >= 2 && in.connected) {
    const long long rr = r;
    if (r % 2 == 0) {
      Rational a(rr * rr + 2 * rr, rr * rr + rr + 2);
      a *= Rational(n, 2);
      Rational b(n + 1, 2);
      out.push_back(exact_entry("regular-matching", std::max(a, b),
                                "max{(r^2+2r)/(r^2+r+2) * n/2, (n+1)/2}, connected r-regular, r even"));
    } else {
      Rational q((rr * rr * rr + rr * rr - 6 * rr + 2) * n + 2 * rr - 2, 2 * (rr * rr * rr - 3 * rr));
      out.push_back(exact_entry("regular-matching", q,
                                "((r^3+r^2-6r+2) n + 2r - 2) / 2(r^3-3r), connected r-regular, r odd"));
    }
  } else {
    out.push_back(skipped("regular-matching", "requires a connected r-regular graph with r >= 2"));
  }

  if (n > 0 && r >= 1 && in.class_one)
    out.push_back(exact_entry("regular-class1", Rational(n, 2), "n / 2, regular of class 1"));
  else
    out.push_back(skipped("regular-class1", "requires a regular class-1 graph with r >= 1"));

  if (n > 0 && r >= 0 && 2 * r >= n)
    out.push_back(exact_entry("regular-dirac", Rational(detail::ceil_div(n, 2)), "ceil(n/2), r-regular with r >= n/2"));
  else
    out.push_back(skipped("regular-dirac", "requires an r-regular graph with r >= n/2"));

  if (n > 0 && (in.bipartite || flags.assert_perfect))
    out.push_back(real_entry("perfect",
                             in.alpha * std::log2(static_cast<double>(detail::ceil_div(n, in.alpha) + 1)),
                             in.bipartite ? "alpha log(ceil(n/alpha) + 1), bipartite hence perfect"
                                          : "alpha log(ceil(n/alpha) + 1), perfection asserted by caller"));
  else
    out.push_back(skipped("perfect", "perfection not established (not bipartite, not asserted)"));

  if (n > 0 && in.complete)
    out.push_back(real_entry("complete-erdos", std::log2(n + 1.0), "log(n+1), G complete"));
  else
    out.push_back(skipped("complete-erdos", "G is not complete"));

  for (auto& e : transversal_upper_bounds(n, in.alpha)) out.push_back(std::move(e));

  if (n > 0) {
    auto rd = r_domination_upper_bound(n, in.alpha, 1);
    auto e = real_entry("r-domination-1", rd.value,
                        "min over k >= 1 of (2k-1) alpha + n ln(k+1)/(k+1) + n (2 ln(k+1))/(k+1), r = 1");
    e.argmin_k = rd.k;
    out.push_back(e);
  } else {
    out.push_back(skipped("r-domination-1", "empty vertex set"));
  }
  return out;
}

inline std::vector<BoundEntry> lower_bounds(const Graph& g) { return lower_bounds(compute_bound_inputs(g)); }
inline std::vector<BoundEntry> upper_bounds(const Graph& g, BoundsFlags flags = {}) {
  return upper_bounds(compute_bound_inputs(g), flags);
}

inline std::string describe_report(const BoundsReport& r) {
  std::ostringstream out;
  out << "n=" << r.inputs.n << " m=" << r.inputs.m << " alpha=" << r.inputs.alpha
      << " alpha'=" << r.inputs.matching << " chi=" << r.inputs.chi << " mad=" << to_string(r.inputs.mad)
      << "\n";
  for (const auto* list : {&r.lower, &r.upper})
    for (const auto& e : *list)
      if (e.applicable) out << "  " << e.name << " = " << e.value << "\n";
  return out.str();
}

/// Assembles [ceil(max lower), floor(min upper)] from recorded inputs.
inline BoundsReport sandwich(const BoundInputs& in, BoundsFlags flags = {}) {
  BoundsReport r;
  r.inputs = in;
  r.lower = lower_bounds(in);
  r.upper = upper_bounds(in, flags);
  r.sandwich_lo = 0;
  r.sandwich_hi = std::numeric_limits<long long>::max();
  for (const auto& e : r.lower)
    if (e.applicable) r.sandwich_lo = std::max(r.sandwich_lo, e.ceiled());
  for (const auto& e : r.upper)
    if (e.applicable) r.sandwich_hi = std::min(r.sandwich_hi, e.floored());
  if (r.sandwich_lo > r.sandwich_hi)
    throw InvariantViolation("bounds sandwich is empty: lower " + std::to_string(r.sandwich_lo) +
                             " > upper " + std::to_string(r.sandwich_hi) + "\n" + describe_report(r));
  return r;
}

inline BoundsReport sandwich(const Graph& g, BoundsFlags flags = {}) {
  return sandwich(compute_bound_inputs(g), flags);
}

/// Tightest certified upper bound and its name.
inline std::pair<long long, std::string> best_upper(const BoundsReport& r) {
  std::pair<long long, std::string> best{std::numeric_limits<long long>::max(), ""};
  for (const auto& e : r.upper)
    if (e.applicable && e.floored() < best.first) best = {e.floored(), e.name};
  return best;
}

}  // namespace oridom
