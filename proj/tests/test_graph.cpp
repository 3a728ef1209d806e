#include <gtest/gtest.h>

#include <set>

#include "lapdom/generators.hpp"
#include "lapdom/graph.hpp"
#include "lapdom/graph6.hpp"
#include "support.hpp"

using namespace lapdom;

TEST(Graph, BuildsSortedAdjacencyAndDeduplicates) {
  const Graph g = make_graph(4, {{2, 0}, {0, 1}, {1, 0}, {3, 2}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()), (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(1, 3));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(make_graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(make_graph(3, {{0, 3}}), GraphError);
}

TEST(Graph, EdgeInsertionAndRemoval) {
  const Graph p3 = path_graph(3);
  const Graph c3 = p3.with_edge({0, 2});
  EXPECT_EQ(c3, cycle_graph(3));
  EXPECT_THROW((void)c3.with_edge({2, 0}), GraphError);
  EXPECT_EQ(c3.without_edge({2, 0}), p3);
  EXPECT_THROW((void)p3.without_edge({0, 2}), GraphError);
}

TEST(Graph, ComplementOfPathOnFourIsPath) {
  const Graph c = complement(path_graph(4));
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(complement(complete_graph(5)), empty_graph(5));
  EXPECT_EQ(complement(complement(figure1_tree())), figure1_tree());
}

TEST(Graph, CartesianProductLabelsAndStructure) {
  const Graph c4 = cartesian_product(path_graph(2), path_graph(2));
  EXPECT_EQ(c4.size(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2u);
  // (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3.
  EXPECT_TRUE(c4.adjacent(0, 1));
  EXPECT_TRUE(c4.adjacent(0, 2));
  EXPECT_FALSE(c4.adjacent(0, 3));

  const Graph g = cycle_graph(5);
  const Graph h = star_graph(4);
  const Graph p = cartesian_product(g, h);
  EXPECT_EQ(p.order(), 20u);
  EXPECT_EQ(p.size(), g.size() * h.order() + h.size() * g.order());
  for (Vertex i = 0; i < 5; ++i) {
    for (Vertex j = 0; j < 4; ++j) EXPECT_EQ(p.degree(i * 4 + j), g.degree(i) + h.degree(j));
  }
  EXPECT_THROW((void)cartesian_product(g, h, 19), GraphError);
}

TEST(Graph, CartesianPowerOfK2IsHypercube) {
  const Graph q3 = cartesian_power(path_graph(2), 3);
  EXPECT_EQ(q3.order(), 8u);
  EXPECT_EQ(q3.size(), 12u);
  EXPECT_EQ(cartesian_power(cycle_graph(4), 1), cycle_graph(4));
}

TEST(Graph, ClassifyCountsComponentsAndCycles) {
  const GraphClass t = classify(figure1_tree());
  EXPECT_TRUE(t.connected && t.is_tree && t.is_forest && t.isolate_free);
  EXPECT_EQ(t.cyclomatic, 0u);
  EXPECT_EQ(t.max_degree, 4u);

  const Graph two = make_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  const GraphClass c = classify(two);
  EXPECT_FALSE(c.connected);
  EXPECT_FALSE(c.isolate_free);
  EXPECT_EQ(c.components, 4u);
  EXPECT_EQ(c.cyclomatic, 1u);
  EXPECT_FALSE(c.is_forest);

  const GraphClass k1 = classify(complete_graph(1));
  EXPECT_TRUE(k1.is_tree);
  EXPECT_FALSE(k1.isolate_free);
}

TEST(Graph, DistancesMatchFloydWarshall) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = erdos_renyi(6 + seed % 9, 0.25, seed);
    const auto d = reference::floyd_warshall(g);
    for (Vertex s = 0; s < g.order(); ++s) {
      const auto bfs = bfs_distances(g, s);
      for (Vertex t = 0; t < g.order(); ++t) {
        if (d[s][t] == reference::kUnreachable) {
          EXPECT_FALSE(bfs[t].has_value());
        } else {
          ASSERT_TRUE(bfs[t].has_value());
          EXPECT_EQ(*bfs[t], d[s][t]);
        }
      }
    }
    std::size_t ecc = 0;
    bool finite = true;
    for (const auto& row : d) {
      for (std::size_t x : row) {
        if (x == reference::kUnreachable) finite = false;
        else ecc = std::max(ecc, x);
      }
    }
    if (finite) {
      EXPECT_EQ(diameter(g), ecc);
    } else {
      EXPECT_FALSE(diameter(g).has_value());
    }
  }
}

TEST(Graph, DiameterOfNamedFamilies) {
  EXPECT_EQ(diameter(path_graph(7)), 6u);
  EXPECT_EQ(diameter(complete_graph(1)), 0u);
  EXPECT_EQ(diameter(figure1_tree()), 8u);
  EXPECT_FALSE(diameter(empty_graph(2)).has_value());
}

TEST(Graph6, EncodesKnownStrings) {
  // Reference strings from networkx.
  EXPECT_EQ(emit_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(emit_graph6(path_graph(5)), "DhC");
  EXPECT_EQ(emit_graph6(complete_graph(1)), "@");
  EXPECT_EQ(emit_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(emit_graph6(complete_bipartite_graph(2, 3)), "D]o");
  EXPECT_EQ(emit_graph6(make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}})), "DyG");
  const std::string p70 = emit_graph6(path_graph(70));
  EXPECT_EQ(p70.substr(0, 4), "~?@E");
  EXPECT_EQ(p70.back(), 'G');
}

TEST(Graph6, DecodesKnownStrings) {
  const Graph petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10u);
  EXPECT_EQ(petersen.size(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
  EXPECT_EQ(diameter(petersen), 2u);
  EXPECT_EQ(parse_graph6(">>graph6<<DhC\n"), path_graph(5));
  EXPECT_EQ(parse_graph6("?").order(), 0u);
}

TEST(Graph6, RoundTripsRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = seed * 7 % 90;
    const Graph g = erdos_renyi(n, 0.3, seed);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g) << n;
  }
  const Graph big = random_tree(300, 5);
  EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), GraphError);
  EXPECT_THROW(parse_graph6("Dh"), GraphError);     // too short
  EXPECT_THROW(parse_graph6("DhCC"), GraphError);   // too long
  EXPECT_THROW(parse_graph6("Dh "), GraphError);    // byte out of range
  EXPECT_THROW(parse_graph6("Bh"), GraphError);     // nonzero padding
}

TEST(Generators, NamedFamilies) {
  EXPECT_EQ(path_graph(1).size(), 0u);
  EXPECT_EQ(cycle_graph(6).size(), 6u);
  EXPECT_THROW(cycle_graph(2), GraphError);
  const Graph s = star_graph(9);
  EXPECT_EQ(s.degree(0), 8u);
  EXPECT_THROW(star_graph(1), GraphError);
  EXPECT_EQ(complete_graph(6).size(), 15u);
  EXPECT_EQ(complete_bipartite_graph(3, 4).size(), 12u);
  const std::vector<std::size_t> params = {3, 4};
  EXPECT_EQ(generate("complete_bipartite", params), complete_bipartite_graph(3, 4));
  EXPECT_THROW(generate("nope", params), std::invalid_argument);
}

TEST(Generators, FigureOneTreeShape) {
  const Graph t = figure1_tree();
  EXPECT_EQ(t.order(), 65u);
  EXPECT_EQ(t.size(), 64u);
  std::size_t leaves = 0;
  std::multiset<std::size_t> degrees;
  for (Vertex v = 0; v < t.order(); ++v) {
    degrees.insert(t.degree(v));
    if (t.degree(v) == 1) ++leaves;
  }
  EXPECT_EQ(leaves, 24u);
  EXPECT_EQ(degrees.count(4), 5u);   // root and the four apexes
  EXPECT_EQ(degrees.count(3), 12u);  // middle vertices
  EXPECT_EQ(degrees.count(2), 24u);  // inner vertices
  EXPECT_EQ(t.degree(0), 4u);
}

TEST(Generators, TkTreeJoinsCopiesUnderNewRoot) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const Graph t = tk_tree(k);
    EXPECT_EQ(t.order(), 65 * k + 1);
    EXPECT_TRUE(classify(t).is_tree);
    EXPECT_EQ(t.degree(0), k);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_TRUE(t.adjacent(0, static_cast<Vertex>(1 + 65 * i + tk_attachment_label(TkAttachment::pendant))));
    }
  }
  const Graph r = tk_tree(2, TkAttachment::copy_root);
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_TRUE(r.adjacent(0, 66));
  EXPECT_THROW(tk_tree(0), GraphError);
}

TEST(Generators, PrueferDecodingMatchesReference) {
  // networkx.from_prufer_sequence([3, 3, 3, 4]) on 6 vertices.
  const std::vector<Vertex> seq = {3, 3, 3, 4};
  EXPECT_EQ(tree_from_pruefer(6, seq).edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  const std::vector<Vertex> bad = {6};
  EXPECT_THROW(tree_from_pruefer(3, bad), GraphError);
}

TEST(Generators, LabeledTreeEnumerationIsCompleteAndDistinct) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> seen;
    enumerate_labeled_trees(n, [&](const Graph& t) {
      EXPECT_TRUE(classify(t).is_tree);
      seen.insert(t.edges());
      return true;
    });
    EXPECT_EQ(seen.size(), labeled_tree_count(n)) << n;
  }
  EXPECT_EQ(labeled_tree_count(8), 262144u);
  std::size_t visits = 0;
  enumerate_labeled_trees(5, [&](const Graph&) { return ++visits < 10; });
  EXPECT_EQ(visits, 10u);
  EXPECT_THROW(enumerate_labeled_trees(9, [](const Graph&) { return true; }), GraphError);
}

TEST(Generators, RandomModelsAreDeterministic) {
  EXPECT_EQ(random_tree(40, 7), random_tree(40, 7));
  EXPECT_TRUE(classify(random_tree(40, 7)).is_tree);
  EXPECT_EQ(erdos_renyi(12, 0.5, 3), erdos_renyi(12, 0.5, 3));
  EXPECT_EQ(erdos_renyi(9, 0.0, 1).size(), 0u);
  EXPECT_EQ(erdos_renyi(9, 1.0, 1).size(), 36u);
  EXPECT_THROW(erdos_renyi(4, 1.5, 1), GraphError);
}
