#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oridom/oridom.hpp"

namespace oridom::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "oridom";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitParse = 3,
  kExitBudget = 4,
  kExitInvariant = 5,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string input = "-";
  std::string format = "auto";  // edgelist | graph6 | hypergraph | arcs
  std::string out = "json";     // json | csv | human
  std::uint64_t seed = 0;
  std::uint64_t budget = kUnlimitedBudget;
  int workers = 1;
  bool verify = false;
  bool assert_perfect = false;
  bool exhaustive = false;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> n;
  std::optional<int> s;
  // construct
  std::string name;
  std::string subset;
  std::string inner;
  // family-stats
  std::string family;
};

// ---------------------------------------------------------------------------
// Input

inline std::string read_text(const std::string& path, std::istream& stdin_stream) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::string resolved_format(const RunConfig& c, const char* fallback) {
  return c.format == "auto" ? fallback : c.format;
}

inline Graph read_graph(const RunConfig& c, std::istream& in) {
  auto fmt = resolved_format(c, "edgelist");
  auto text = read_text(c.input, in);
  if (fmt == "edgelist") return parse_edge_list(text);
  if (fmt == "graph6") {
    std::istringstream ss(text);
    auto graphs = read_graph6_stream(ss);
    if (graphs.size() != 1)
      throw ParseError("graph6: expected exactly one graph, found " + std::to_string(graphs.size()));
    return graphs.front();
  }
  throw UsageError("format " + fmt + " does not describe a graph");
}

inline std::vector<Graph> read_graph_stream(const RunConfig& c, std::istream& in) {
  auto fmt = resolved_format(c, "graph6");
  if (fmt != "graph6") throw UsageError("graph streams are read as graph6");
  std::istringstream ss(read_text(c.input, in));
  return read_graph6_stream(ss);
}

inline Orientation read_orientation(const RunConfig& c, std::istream& in) {
  auto fmt = resolved_format(c, "arcs");
  if (fmt != "arcs") throw UsageError("format " + fmt + " does not describe a digraph; use --format arcs");
  return parse_arc_list(read_text(c.input, in));
}

inline Hypergraph read_hypergraph(const RunConfig& c, std::istream& in) {
  auto fmt = resolved_format(c, "hypergraph");
  if (fmt != "hypergraph") throw UsageError("format " + fmt + " does not describe a hypergraph");
  return parse_hypergraph(read_text(c.input, in));
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned = text;
  for (auto& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream ss(cleaned);
  long long v;
  while (ss >> v) {
    if (v < 0 || v >= kMaxVertices) throw ParseError("vertex list: index out of range");
    out.push_back(static_cast<int>(v));
  }
  if (!ss.eof()) throw ParseError("vertex list: unexpected token");
  return out;
}

// ---------------------------------------------------------------------------
// JSON encoding

inline std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

inline Json to_json(const VertexSet& s) { return s.to_vector(); }

inline Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["graph6"] = to_graph6(g);
  return j;
}

inline Json orientation_json(const Orientation& d) {
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head});
  Json j;
  j["n"] = d.order();
  j["arcs"] = std::move(arcs);
  return j;
}

inline Json certificate_json(const Certificate& c) {
  auto check = verify_certificate(c);
  Json j;
  j["orientation"] = orientation_json(c.orientation);
  j["claimed_gamma"] = c.claimed_gamma;
  j["dds"] = to_json(c.dds_witness);
  j["kind"] = to_string(c.kind);
  j["check"] = {{"witness_valid", check.witness_valid},
                {"solved", check.solved ? Json(*check.solved) : Json(nullptr)},
                {"consistent", check.consistent}};
  return j;
}

inline Json rational_json(const Rational& q) {
  return {{"value", decimal(boost::rational_cast<double>(q))}, {"exact", to_string(q)}};
}

inline Json bound_json(const BoundEntry& b, bool lower) {
  Json j;
  j["name"] = b.name;
  j["applicable"] = b.applicable;
  if (b.applicable) {
    j["value"] = decimal(b.value);
    j["exact"] = b.exact ? Json(to_string(*b.exact)) : Json(nullptr);
    j["rounded"] = lower ? b.ceiled() : b.floored();
  } else {
    j["value"] = nullptr;
    j["exact"] = nullptr;
    j["rounded"] = nullptr;
  }
  j["why"] = b.why;
  if (b.argmin_k) j["argmin_k"] = *b.argmin_k;
  return j;
}

inline Json inputs_json(const BoundInputs& in) {
  Json j;
  j["n"] = in.n;
  j["m"] = in.m;
  j["alpha"] = in.alpha;
  j["matching"] = in.matching;
  j["gamma"] = in.gamma;
  j["chi"] = in.chi;
  j["chi_edge"] = in.chi_edge;
  j["chi_complement"] = in.chi_complement;
  j["min_degree"] = in.min_degree;
  j["max_degree"] = in.max_degree;
  j["diameter"] = in.diameter == kInfiniteDiameter ? Json(nullptr) : Json(in.diameter);
  j["mad"] = to_string(in.mad);
  j["regularity"] = in.regularity >= 0 ? Json(in.regularity) : Json(nullptr);
  j["connected"] = in.connected;
  j["bipartite"] = in.bipartite;
  j["complete"] = in.complete;
  j["class_one"] = in.class_one;
  return j;
}

inline Json gamma_d_json(const GammaDResult& r, bool upper) {
  Json j;
  j[upper ? "gamma_d_upper" : "gamma_d_lower"] = r.value;
  j["exact"] = r.exact;
  j["interval"] = {r.value, r.exact ? r.value : r.upper};
  j["witness"] = certificate_json(r.witness);
  if (upper) j["closing_bound"] = r.closing_bound.empty() ? Json(nullptr) : Json(r.closing_bound);
  j["orientations_explored"] = r.orientations_explored;
  j["nodes"] = r.nodes;
  return j;
}

inline Json family_json(const FamilyStats& s) {
  Json j;
  j["family"] = s.family;
  j["n"] = s.n;
  j["r"] = s.r ? Json(*s.r) : Json(nullptr);
  j["count"] = s.count;
  j["min_gamma_d"] = s.min_gamma_d;
  j["max_gamma_d"] = s.max_gamma_d;
  j["argmin"] = s.argmin;
  j["argmax"] = s.argmax;
  j["min_exact"] = s.min_exact;
  j["max_exact"] = s.max_exact;
  return j;
}

inline Json transversal_json(const TransversalResult& t) {
  Json j;
  j["r"] = t.r;
  j["mode"] = t.mode == TransversalMode::exact ? "exact" : "randomized";
  j["feasible"] = t.feasible;
  j["size"] = t.feasible ? Json(t.size) : Json(nullptr);
  j["set"] = t.feasible ? to_json(t.set) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Output

inline void render_human(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                   return y.is_primitive();
                                 })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_structured() && !flat(v)) {
        out << pad << key << ":\n";
        render_human(v, out, indent + 2);
      } else {
        out << pad << key << ": " << (v.is_structured() ? v.dump() : scalar(v)) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_human(v, out, indent + 2);
      } else {
        out << pad << "- " << (v.is_structured() ? v.dump() : scalar(v)) << '\n';
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

inline std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

/// One header row from the first row's keys, then one line per row.
inline void render_csv(const Json& rows, std::ostream& out) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, v] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, v] : row.items()) {
      out << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the result object and may lower the exit code.

struct Outcome {
  Json body;
  Json csv_rows;  // set by table commands
  int code = kExitOk;
};

inline Outcome cmd_invariants(const RunConfig& c, std::istream& in) {
  auto g = read_graph(c, in);
  auto st = structure(g);
  Json j;
  j["graph"] = graph_json(g);
  auto alpha = independence_number(g);
  auto omega = clique_number(g);
  auto gamma = domination_number(g);
  auto cover = vertex_cover_number(g);
  auto match = matching_number(g);
  auto chi = chromatic_number(g);
  auto chi_e = edge_chromatic_number(g);
  j["alpha"] = {{"value", alpha.value}, {"witness", to_json(alpha.witness)}};
  j["omega"] = {{"value", omega.value}, {"witness", to_json(omega.witness)}};
  j["gamma"] = {{"value", gamma.value}, {"witness", to_json(gamma.witness)}};
  j["vertex_cover"] = {{"value", cover.value}, {"witness", to_json(cover.witness)}};
  Json edges = Json::array();
  for (const auto& e : match.matching) edges.push_back({e.u, e.v});
  j["matching"] = {{"value", match.value}, {"witness", edges}};
  j["chi"] = {{"value", chi.value}, {"coloring", chi.color}};
  j["chi_edge"] = {{"value", chi_e.value}, {"class_one", chi_e.class_one}, {"coloring", chi_e.color}};
  j["chi_complement"] = chromatic_number(complement(g)).value;
  if (g.order() > 0) {
    auto mad = max_average_degree(g);
    j["mad"] = rational_json(mad.value);
    j["mad"]["witness"] = to_json(mad.witness);
  } else {
    j["mad"] = nullptr;
  }
  j["min_degree"] = st.degrees.min_degree;
  j["max_degree"] = st.degrees.max_degree;
  j["degrees"] = st.degrees.sequence;
  j["regularity"] = st.degrees.regular() ? Json(st.degrees.regularity) : Json(nullptr);
  j["components"] = st.components;
  j["bipartite"] = st.bipartite;
  j["diameter"] = st.diameter == kInfiniteDiameter ? Json(nullptr) : Json(st.diameter);
  return {j, nullptr};
}

inline Outcome cmd_gamma(const RunConfig& c, std::istream& in) {
  auto g = read_graph(c, in);
  auto gamma = domination_number(g);
  Json j;
  j["graph"] = graph_json(g);
  j["gamma"] = gamma.value;
  j["witness"] = to_json(gamma.witness);
  return {j, nullptr};
}

inline Outcome cmd_gamma_directed(const RunConfig& c, std::istream& in) {
  auto d = read_orientation(c, in);
  const int r = c.r.value_or(1);
  if (r < 1) throw UsageError("--r must be at least 1");
  auto res = gamma_r_directed(d, r);
  Json j;
  j["orientation"] = orientation_json(d);
  j["r"] = r;
  j["gamma"] = res.value;
  j["witness"] = to_json(res.witness);
  j["nodes"] = res.nodes;
  return {j, nullptr};
}

inline Outcome cmd_gamma_d_exact(const RunConfig& c, std::istream& in) {
  auto g = read_graph(c, in);
  auto report = sandwich(g, {c.assert_perfect});
  auto res = upper_directed_domination(g, {c.budget, c.workers}, report);
  Json j;
  j["graph"] = graph_json(g);
  j["budget"] = c.budget == kUnlimitedBudget ? Json(nullptr) : Json(c.budget);
  j.update(gamma_d_json(res, true));
  j["sandwich"] = {report.sandwich_lo, report.sandwich_hi};
  if (c.exhaustive) {
    if (g.size() > kMaxVerifiedEdges)
      throw UsageError("--exhaustive is limited to " + std::to_string(kMaxVerifiedEdges) + " edges");
    int best = 0;
    std::uint64_t count = 0;
    OrientationEnumerator it(g);
    while (auto d = it.next()) {
      best = std::max(best, gamma_directed(*d).value);
      ++count;
    }
    j["exhaustive"] = {{"gamma_d_upper", best}, {"orientations", count}};
    if (res.exact && best != res.value)
      throw InvariantViolation("exhaustive enumeration gives " + std::to_string(best) + ", search gives " +
                               std::to_string(res.value));
  }
  return {j, nullptr, res.exact ? kExitOk : kExitBudget};
}

inline Outcome cmd_gamma_d_lower(const RunConfig& c, std::istream& in) {
  auto g = read_graph(c, in);
  if (c.verify && g.size() > kMaxVerifiedEdges)
    throw UsageError("--verify is limited to " + std::to_string(kMaxVerifiedEdges) + " edges");
  auto res = lower_directed_domination(g, c.verify);
  Json j;
  j["graph"] = graph_json(g);
  j.update(gamma_d_json(res, false));
  j["verified"] = c.verify;
  return {j, nullptr};
}

inline Outcome cmd_bounds(const RunConfig& c, std::istream& in) {
  auto g = read_graph(c, in);
  auto report = sandwich(g, {c.assert_perfect});
  Json lower = Json::array(), upper = Json::array();
  for (const auto& b : report.lower) lower.push_back(bound_json(b, true));
  for (const auto& b : report.upper) upper.push_back(bound_json(b, false));
  Json j;
  j["graph"] = graph_json(g);
  j["lower"] = std::move(lower);
  j["upper"] = std::move(upper);
  j["sandwich"] = {report.sandwich_lo, report.sandwich_hi};
  j["inputs"] = inputs_json(report.inputs);
  return {j, nullptr};
}

inline int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

inline Outcome cmd_construct(const RunConfig& c, std::istream& in) {
  Json j;
  j["construction"] = c.name;
  auto tight = parse_tightness_kind(c.name);
  if (c.name == "independent-set" || c.name == "dominating-set" || c.name == "hakimi") {
    auto g = read_graph(c, in);
    j["graph"] = graph_json(g);
    Certificate cert;
    if (c.name == "independent-set") {
      cert = independent_set_orientation(g);
    } else if (c.name == "dominating-set") {
      cert = dominating_set_orientation(g);
    } else {
      auto d = hakimi_orientation(g);
      auto gd = gamma_directed(d);
      cert = {d, gd.value, gd.witness, ClaimKind::exact};
      j["max_out_degree"] = d.max_out_degree();
    }
    j["certificate"] = certificate_json(cert);
  } else if (c.name == "outerplanar") {
    auto cert = outerplanar_extremal(need(c.n, "--n"));
    j["graph"] = graph_json(cert.orientation.base());
    j["certificate"] = certificate_json(cert);
  } else if (c.name == "extend") {
    auto g = read_graph(c, in);
    auto u = parse_int_list(c.subset);
    if (c.inner.empty()) throw UsageError("extend needs --inner (arc list of the orientation of G[U])");
    auto inner = parse_arc_list(read_text(c.inner, in));
    auto d = extend_orientation(g, u, inner);
    auto gd = gamma_directed(d);
    j["graph"] = graph_json(g);
    j["subset"] = u;
    j["certificate"] = certificate_json({d, gd.value, gd.witness, ClaimKind::exact});
  } else if (tight) {
    int a = 0, b = 0;
    switch (*tight) {
      case TightnessKind::disjoint_cliques: a = need(c.r, "--r"), b = need(c.k, "--k"); break;
      case TightnessKind::triangles_plus_isolated: a = need(c.r, "--r"), b = c.s.value_or(0); break;
      case TightnessKind::empty_plus_clique: a = need(c.n, "--n"), b = need(c.k, "--k"); break;
    }
    auto g = tightness_family(*tight, a, b);
    auto res = upper_directed_domination(g, {c.budget, c.workers});
    j["graph"] = graph_json(g);
    j.update(gamma_d_json(res, true));
    j["certificate"] = j["witness"];
    j.erase("witness");
    return {j, nullptr, res.exact ? kExitOk : kExitBudget};
  } else if (c.name == "random-tournament") {
    auto d = random_tournament(need(c.n, "--n"), c.seed);
    auto gd = gamma_directed(d);
    j["certificate"] = certificate_json({d, gd.value, gd.witness, ClaimKind::exact});
  } else if (c.name == "qr-tournament") {
    auto d = quadratic_residue_tournament(need(c.n, "--n"));
    auto gd = gamma_directed(d);
    j["certificate"] = certificate_json({d, gd.value, gd.witness, ClaimKind::exact});
  } else {
    throw UsageError("unknown construction " + c.name);
  }
  return {j, nullptr};
}

inline Outcome cmd_transversal(const RunConfig& c, std::istream& in, bool with_r) {
  auto h = read_hypergraph(c, in);
  const int r = with_r ? need(c.r, "--r") : 1;
  if (r < 1) throw UsageError("--r must be at least 1");
  Json j;
  j["hypergraph"] = {{"n", h.n}, {"m", h.edge_count()}};
  j.update(transversal_json(r_transversal_number(h, r)));
  return {j, nullptr};
}

inline Outcome cmd_randomized_transversal(const RunConfig& c, std::istream& in) {
  auto h = read_hypergraph(c, in);
  const int r = need(c.r, "--r");
  auto t = randomized_r_transversal(h, r, c.seed);
  const int k = *h.uniformity();
  const double bound = randomized_transversal_bound(h.n, h.edge_count(), k, r);
  Json j;
  j["hypergraph"] = {{"n", h.n}, {"m", h.edge_count()}, {"k", k}};
  j.update(transversal_json(t));
  j["valid"] = is_r_transversal(h, t.set, r);
  j["expected_size_bound"] = decimal(bound);
  return {j, nullptr};
}

inline Outcome cmd_tournament_check(const RunConfig& c, std::istream& in) {
  auto d = read_orientation(c, in);
  const int k = need(c.k, "--k");
  auto res = k_domination_property(d, k);
  Json j;
  j["n"] = d.order();
  j["k"] = k;
  j["holds"] = res.holds;
  j["failing_set"] = res.failing_set ? Json(*res.failing_set) : Json(nullptr);
  return {j, nullptr};
}

inline Outcome cmd_path_partition(const RunConfig& c, std::istream& in) {
  auto d = read_orientation(c, in);
  auto paths = min_path_partition(d);
  Json j;
  j["n"] = d.order();
  j["count"] = paths.size();
  j["paths"] = paths;
  return {j, nullptr};
}

inline Outcome cmd_family_stats(const RunConfig& c, std::istream& in) {
  FamilyOptions opt{c.budget, c.workers};
  FamilyStats s;
  bool validated = true;
  if (c.family == "outerplanar") {
    s = outerplanar_family_stats(need(c.n, "--n"), opt);
  } else if (c.family == "regular") {
    const int r = need(c.r, "--r"), n = need(c.n, "--n");
    s = family_stats(load_regular_fixture(r, n), "r-regular", {}, opt);
    s.n = n;
    s.r = r;
  } else if (c.family == "graph6" || c.family == "planar") {
    auto graphs = read_graph_stream(c, in);
    s = family_stats(graphs, c.family == "planar" ? "maximal-planar" : "graph6-stream", {}, opt);
    validated = c.family == "graph6";
  } else {
    throw UsageError("unknown family " + c.family + " (outerplanar | regular | graph6 | planar)");
  }
  Json row = family_json(s);
  row["validated"] = validated;
  Json j;
  j["stats"] = row;
  if (!validated) j["note"] = "unvalidated family";
  return {j, Json::array({row})};
}

inline Outcome cmd_conjectures(const RunConfig& c, std::istream&) {
  auto rows = conjecture_report(c.n.value_or(8), fixture_root(), {c.budget, c.workers});
  Json table = Json::array();
  for (const auto& row : rows) {
    Json t;
    t["n"] = row.n;
    t["r"] = row.r;
    t["count"] = row.stats.count;
    t["m"] = row.stats.min_gamma_d;
    t["M"] = row.stats.max_gamma_d;
    t["exact"] = row.stats.min_exact && row.stats.max_exact;
    t["argmin"] = row.stats.argmin;
    t["argmax"] = row.stats.argmax;
    t["half_n"] = to_string(row.half_n);
    t["eqm_upper"] = row.eqm_upper ? Json(to_string(*row.eqm_upper)) : Json(nullptr);
    t["eqm_holds"] = row.eqm_holds;
    t["conjecture1"] = row.conjecture1;
    t["question1_ratio"] = to_string(row.question1_ratio);
    t["alpha_floor_holds"] = row.alpha_floor_holds;
    table.push_back(std::move(t));
  }
  Json j;
  j["rows"] = table;
  return {j, table};
}

// ---------------------------------------------------------------------------

inline Outcome dispatch(const RunConfig& c, std::istream& in) {
  const auto& cmd = c.command;
  if (cmd == "invariants") return cmd_invariants(c, in);
  if (cmd == "gamma") return cmd_gamma(c, in);
  if (cmd == "gamma-directed") return cmd_gamma_directed(c, in);
  if (cmd == "gamma-d-exact") return cmd_gamma_d_exact(c, in);
  if (cmd == "gamma-d-lower") return cmd_gamma_d_lower(c, in);
  if (cmd == "bounds") return cmd_bounds(c, in);
  if (cmd == "construct") return cmd_construct(c, in);
  if (cmd == "transversal") return cmd_transversal(c, in, false);
  if (cmd == "r-transversal") return cmd_transversal(c, in, true);
  if (cmd == "randomized-transversal") return cmd_randomized_transversal(c, in);
  if (cmd == "tournament-check") return cmd_tournament_check(c, in);
  if (cmd == "path-partition") return cmd_path_partition(c, in);
  if (cmd == "family-stats") return cmd_family_stats(c, in);
  if (cmd == "conjectures") return cmd_conjectures(c, in);
  throw UsageError("unknown subcommand " + cmd);
}

inline void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("input", c.input, "input file, or - for stdin")->capture_default_str();
  sub->add_option("--format", c.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6", "hypergraph", "arcs"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--budget", c.budget, "solver node budget");
  sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  sub->add_flag("--verify", c.verify, "exhaustively verify where supported");
  sub->add_flag("--assert-perfect", c.assert_perfect, "treat the input graph as perfect");
  sub->add_flag("--exhaustive", c.exhaustive, "cross-check by full enumeration");
  sub->add_option("--k", c.k);
  sub->add_option("--r", c.r);
  sub->add_option("--n", c.n);
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"directed domination workbench", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"invariants", "classical invariants of a graph"},
      {"gamma", "domination number of a graph"},
      {"gamma-directed", "gamma_r(D) of an oriented graph"},
      {"gamma-d-exact", "upper directed domination number"},
      {"gamma-d-lower", "lower directed domination number"},
      {"bounds", "lower and upper bounds on the upper directed domination number"},
      {"construct", "named orientation constructions"},
      {"transversal", "transversal number of a hypergraph"},
      {"r-transversal", "r-transversal number of a hypergraph"},
      {"randomized-transversal", "randomized r-transversal"},
      {"tournament-check", "k-domination property of a tournament"},
      {"path-partition", "minimum directed path partition"},
      {"family-stats", "min and max over a graph family"},
      {"conjectures", "regular-graph table"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string(name) == "construct") {
      sub->add_option("name", c.name, "construction name")->required();
      sub->add_option("--s", c.s, "isolated vertices for triangles-plus-isolated");
      sub->add_option("--subset", c.subset, "vertex set U for extend, comma separated");
      sub->add_option("--inner", c.inner, "arc list file of the orientation of G[U] for extend");
    }
    if (std::string(name) == "family-stats")
      sub->add_option("--family", c.family, "outerplanar | regular | graph6 | planar")->required();
    add_common(sub, c);
    sub->callback([&c, name = std::string(name)] { c.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitUsage;
  }

  Outcome result;
  try {
    if (c.out == "csv" && c.command != "family-stats" && c.command != "conjectures")
      throw UsageError("csv output is available for family-stats and conjectures only");
    result = dispatch(c, in);
  } catch (const UsageError& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << kToolName << ": parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const FixtureError& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const InvariantViolation& e) {
    err << kToolName << ": invariant violation: " << e.what() << '\n';
    err << "  command: " << c.command << "  input: " << c.input << "  seed: " << c.seed << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << kToolName << ": " << e.what() << '\n';
    return kExitUsage;
  }

  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  doc["command"] = c.command;
  doc["seed"] = c.seed;
  doc.update(result.body);

  if (c.out == "json") {
    out << doc.dump(2) << '\n';
  } else if (c.out == "csv") {
    render_csv(result.csv_rows, out);
  } else {
    render_human(doc, out);
  }
  if (result.code == kExitBudget) err << kToolName << ": budget exhausted; interval reported\n";
  return result.code;
}

}  // namespace oridom::cli
