#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace oridom;
using oridom::testing::random_graph;

TEST(VertexSet, BasicOperations) {
  VertexSet s;
  EXPECT_TRUE(s.empty());
  s.set(3);
  s.set(70);
  s.set(511);
  EXPECT_EQ(s.count(), 3);
  EXPECT_EQ(s.first(), 3);
  EXPECT_EQ(s.next(3), 70);
  EXPECT_EQ(s.next(70), 511);
  EXPECT_EQ(s.next(511), -1);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{3, 70, 511}));
  auto r = VertexSet::range(100);
  EXPECT_EQ(r.count(), 100);
  EXPECT_TRUE((s & r).subset_of(s));
  EXPECT_EQ((r - s).count(), 98);
  EXPECT_TRUE(s.intersects(r));
}

TEST(VertexSet, SmallAndWideAgree) {
  CounterRng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> a, b;
    for (int v = 0; v < 64; ++v) {
      if (rng.coin()) a.push_back(v);
      if (rng.coin()) b.push_back(v);
    }
    auto sa = make_set<SmallSet>(a), sb = make_set<SmallSet>(b);
    auto wa = make_set<VertexSet>(a), wb = make_set<VertexSet>(b);
    EXPECT_EQ((sa & sb).to_vector(), (wa & wb).to_vector());
    EXPECT_EQ((sa | sb).to_vector(), (wa | wb).to_vector());
    EXPECT_EQ((sa - sb).to_vector(), (wa - wb).to_vector());
    EXPECT_EQ(convert_set<VertexSet>(sa), wa);
  }
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ParseError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), ParseError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), ParseError);
  EXPECT_THROW(Graph::from_edges(-1, {}), ParseError);
  EXPECT_THROW(Graph::from_edges(kMaxVertices + 1, {}), ParseError);
}

TEST(Graph, CanonicalEdges) {
  auto g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_EQ(g.edge_index(3, 2), 2);
  EXPECT_EQ(g.edge_index(1, 3), -1);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Graph6, HandDecodedStrings) {
  // "?" : n = 0.  "A_" : n = 2, bit x(0,1) = 1.  "Bw" : n = 3, bits 111.
  EXPECT_EQ(parse_graph6("?"), Graph::from_edges(0, {}));
  EXPECT_EQ(parse_graph6("A_"), families::complete(2));
  EXPECT_EQ(parse_graph6("Bw"), families::complete(3));
  EXPECT_EQ(parse_graph6("A?"), families::empty(2));
  // C_4 as 0-1-2-3-0: upper triangle column order (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101101.
  EXPECT_EQ(parse_graph6("Cl"), families::cycle(4));
  EXPECT_EQ(to_graph6(families::cycle(4)), "Cl");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), families::complete(3));
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);        // missing data
  EXPECT_THROW(parse_graph6("Bww"), ParseError);      // trailing data
  EXPECT_THROW(parse_graph6("A`"), ParseError);       // padding bit set
  EXPECT_THROW(parse_graph6(std::string("A\x1f")), ParseError);
}

TEST(Graph6, RoundTripRandom) {
  CounterRng rng(11);
  for (int t = 0; t < 300; ++t) {
    int n = static_cast<int>(rng.below(80));
    auto g = random_graph(n, 0.3, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g) << n;
  }
  // The long header form starts at n = 63.
  auto big = random_graph(300, 0.05, rng);
  auto text = to_graph6(big);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), big);
}

TEST(Graph6, StreamReportsLine) {
  std::istringstream in("Bw\n\nA_\nB\n");
  try {
    read_graph6_stream(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(EdgeList, ParseWithComments) {
  auto g = parse_edge_list("# triangle\n3\n0 1\n1 2 # edge\n2 0\n");
  EXPECT_EQ(g, families::complete(3));
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 x"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 5"), ParseError);
}

TEST(Graph, ComplementIsInvolution) {
  CounterRng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto g = random_graph(1 + static_cast<int>(rng.below(12)), 0.4, rng);
    auto c = complement(g);
    EXPECT_EQ(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(Graph, InducedSubgraph) {
  auto p = families::petersen();
  auto outer = induced_subgraph(p, std::vector<int>{0, 1, 2, 3, 4});
  EXPECT_EQ(outer, families::cycle(5));
  auto inner = induced_subgraph(p, std::vector<int>{9, 8, 7, 6, 5});
  EXPECT_EQ(inner.size(), 5);
  EXPECT_THROW(induced_subgraph(p, std::vector<int>{10}), std::out_of_range);
}

TEST(Graph, DisjointUnion) {
  auto g = disjoint_union({families::complete(3), families::path(2), families::empty(1)});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(g.adjacent(3, 4));
  EXPECT_EQ(structure(g).components, 3);
  EXPECT_EQ(families::copies(families::complete(3), 2).size(), 6);
}

TEST(Structure, Bipartiteness) {
  auto even = structure(families::cycle(6));
  EXPECT_TRUE(even.bipartite);
  EXPECT_EQ(even.diameter, 3);
  EXPECT_EQ(even.degrees.regularity, 2);
  auto odd = structure(families::cycle(7));
  EXPECT_FALSE(odd.bipartite);
  ASSERT_GE(odd.odd_cycle.size(), 4u);
  EXPECT_EQ(odd.odd_cycle.front(), odd.odd_cycle.back());
  EXPECT_EQ((odd.odd_cycle.size() - 1) % 2, 1u);
  auto split = structure(families::copies(families::path(2), 2));
  EXPECT_EQ(split.diameter, kInfiniteDiameter);
  EXPECT_FALSE(split.connected());
}

TEST(Structure, RandomBipartitionIsProper) {
  CounterRng rng(5);
  for (int t = 0; t < 200; ++t) {
    auto g = random_graph(2 + static_cast<int>(rng.below(10)), 0.25, rng);
    auto st = structure(g);
    if (st.bipartite) {
      for (const auto& e : g.edges()) EXPECT_NE(st.side[e.u], st.side[e.v]);
    } else {
      for (std::size_t i = 0; i + 1 < st.odd_cycle.size(); ++i)
        EXPECT_TRUE(g.adjacent(st.odd_cycle[i], st.odd_cycle[i + 1]));
    }
  }
}

TEST(Families, Shapes) {
  EXPECT_EQ(families::petersen().size(), 15);
  EXPECT_EQ(degree_profile(families::petersen()).regularity, 3);
  EXPECT_EQ(families::complete_bipartite(2, 3).size(), 6);
  EXPECT_EQ(families::star(4).order(), 5);
  EXPECT_EQ(families::star(4).degree(0), 4);
  EXPECT_EQ(families::cycle(3), families::complete(3));
}

TEST(Orientation, ArcsAndDegrees) {
  auto d = Orientation::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(d.is_tournament());
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(d.out_degree(v), 1);
    EXPECT_EQ(d.in_degree(v), 1);
  }
  EXPECT_TRUE(d.has_arc(2, 0));
  EXPECT_FALSE(d.has_arc(0, 2));
  auto r = d.reversed();
  EXPECT_TRUE(r.has_arc(0, 2));
  EXPECT_EQ(parse_arc_list(format_arc_list(d)), d);
  EXPECT_THROW(Orientation::from_arcs(3, {{0, 1}, {1, 0}}), ParseError);
}

TEST(Orientation, TriangleHasTwoCyclicOrientations) {
  auto all = enumerate_orientations(families::complete(3));
  ASSERT_EQ(all.size(), 8u);
  int cyclic = 0;
  for (const auto& d : all) {
    bool c = true;
    for (int v = 0; v < 3; ++v) c = c && d.out_degree(v) == 1;
    cyclic += c;
  }
  EXPECT_EQ(cyclic, 2);
}

TEST(Orientation, FixedArcsRestrictEnumeration) {
  auto g = families::cycle(4);
  auto all = enumerate_orientations(g, {{1, 0}, {2, 3}});
  EXPECT_EQ(all.size(), 4u);
  for (const auto& d : all) {
    EXPECT_TRUE(d.has_arc(1, 0));
    EXPECT_TRUE(d.has_arc(2, 3));
  }
  EXPECT_THROW(enumerate_orientations(g, {{0, 2}}), std::invalid_argument);
}

TEST(Hypergraph, ParseAndFormat) {
  auto h = parse_hypergraph("# fano-ish\n4 2\n0 1 2\n1 3\n");
  EXPECT_EQ(h.n, 4);
  ASSERT_EQ(h.edge_count(), 2);
  EXPECT_EQ(h.edges[1].to_vector(), (std::vector<int>{1, 3}));
  EXPECT_FALSE(h.uniformity());
  EXPECT_EQ(parse_hypergraph(format_hypergraph(h)).edges, h.edges);
  EXPECT_THROW(parse_hypergraph("3 1\n0 4\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("3 2\n0 1\n"), ParseError);
}

TEST(Fixtures, ConnectedSmallGraphs) {
  std::ifstream f(fixture_root() / "connected" / "n_le6.g6");
  ASSERT_TRUE(f);
  auto graphs = read_graph6_stream(f);
  // 1 + 1 + 2 + 6 + 21 + 112 connected graphs on 1..6 vertices.
  EXPECT_EQ(graphs.size(), 143u);
  for (const auto& g : graphs) EXPECT_TRUE(structure(g).connected());
}

TEST(Fixtures, BipartiteGraphs) {
  std::ifstream f(fixture_root() / "bipartite" / "m_le14.g6");
  ASSERT_TRUE(f);
  auto graphs = read_graph6_stream(f);
  EXPECT_GE(graphs.size(), 200u);
  for (const auto& g : graphs) {
    EXPECT_TRUE(structure(g).bipartite);
    EXPECT_LE(g.size(), 14);
  }
}
