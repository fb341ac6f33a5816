#include <random>
#include <string>

#include <gtest/gtest.h>

#include "nbrecon/errors.h"
#include "nbrecon/graph.h"
#include "test_support.h"

namespace nbrecon {
namespace {

using namespace testing;

// Moves the vertex labeled "k" to id k-1.
Graph by_numeric_label(const Graph& g) {
  Graph out(g.n());
  for (const auto& [u, v] : g.edges()) {
    out.add_edge(std::stoi(g.label(u)) - 1, std::stoi(g.label(v)) - 1);
  }
  return out;
}

TEST(VertexSet, BasicAlgebra) {
  const auto a = VertexSet::of(5, {0, 2});
  const auto b = VertexSet::of(5, {2, 3});
  EXPECT_EQ((a | b), VertexSet::of(5, {0, 2, 3}));
  EXPECT_EQ((a & b), VertexSet::of(5, {2}));
  EXPECT_EQ((a - b), VertexSet::of(5, {0}));
  EXPECT_EQ(a.complement(), VertexSet::of(5, {1, 3, 4}));
  EXPECT_EQ(a.complement().complement(), a);
  EXPECT_TRUE(VertexSet::of(5, {2}).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.to_string(), "{0,2}");
  EXPECT_EQ(VertexSet::full(64).size(), 64);
  EXPECT_TRUE(VertexSet::full(64).is_full());
}

TEST(VertexSet, CanonicalOrderIsSizeThenLexicographic) {
  const auto s01 = VertexSet::of(4, {0, 1});
  const auto s02 = VertexSet::of(4, {0, 2});
  const auto s12 = VertexSet::of(4, {1, 2});
  const auto s3 = VertexSet::of(4, {3});
  EXPECT_TRUE(canonical_less(VertexSet(4), s3));
  EXPECT_TRUE(canonical_less(s3, s01));
  EXPECT_TRUE(canonical_less(s01, s02));
  EXPECT_TRUE(canonical_less(s02, s12));
  EXPECT_FALSE(canonical_less(s12, s12));
}

TEST(Graph, RejectsLoopsAndBadIds) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), InputError);
  EXPECT_THROW(g.add_edge(0, 3), InputError);
  EXPECT_THROW(closed_neighborhood(g, 5), InputError);
  EXPECT_THROW(Graph(65), InputError);
}

TEST(Graph, AdjacencyStaysSymmetric) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    Graph g(9);
    for (int step = 0; step < 40; ++step) {
      const int u = static_cast<int>(rng() % 9);
      const int v = static_cast<int>(rng() % 9);
      if (u == v) continue;
      if (rng() & 1) g.add_edge(u, v); else g.remove_edge(u, v);
    }
    for (int u = 0; u < 9; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (int v = 0; v < 9; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
  }
}

TEST(Neighborhoods, Examples) {
  const Graph f3 = twin_graph();
  EXPECT_EQ(closed_neighborhood(f3, 4), one_based_set(8, {1, 5}));
  EXPECT_EQ(closed_neighborhood(complete(3), 0), VertexSet::full(3));
  EXPECT_EQ(closed_neighborhood(Graph(4), 2), VertexSet::single(4, 2));

  EXPECT_EQ(closed_neighborhood_of_set(path3(), VertexSet::of(3, {0, 2})), VertexSet::full(3));
  EXPECT_TRUE(closed_neighborhood_of_set(f3, VertexSet(8)).empty());
  EXPECT_EQ(closed_neighborhood_of_set(f3, one_based_set(8, {2, 4})),
            one_based_set(8, {1, 2, 3, 4, 6, 7, 8}));

  EXPECT_EQ(open_neighborhood(c6(), 0), one_based_set(6, {2, 6}));
  EXPECT_EQ(open_neighborhood(two_k3(), 0), one_based_set(6, {3, 5}));
  EXPECT_TRUE(open_neighborhood(Graph(1), 0).empty());
}

TEST(Neighborhoods, ClosedIsOpenPlusSelfAndUnionDistributes) {
  std::mt19937_64 rng(11);
  for (const Graph& g : all_graphs(5)) {
    for (int v = 0; v < 5; ++v) {
      EXPECT_EQ(closed_neighborhood(g, v), open_neighborhood(g, v) | VertexSet::single(5, v));
    }
    const auto a = VertexSet::from_bits(5, rng());
    const auto b = VertexSet::from_bits(5, rng());
    EXPECT_EQ(closed_neighborhood_of_set(g, a | b),
              closed_neighborhood_of_set(g, a) | closed_neighborhood_of_set(g, b));
    EXPECT_EQ(as_mask(oracle_closed_nbhd(g, a.members())), closed_neighborhood_of_set(g, a).bits());
  }
}

TEST(InducedC4, Examples) {
  EXPECT_TRUE(contains_induced_c4(c4_labelings()[0]));
  EXPECT_TRUE(contains_induced_c4(c4_pendant()));
  EXPECT_FALSE(contains_induced_c4(twin_graph()));
  EXPECT_FALSE(contains_induced_c4(complete(4)));
}

TEST(InducedC4, MatchesFourSubsetOracle) {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      ASSERT_EQ(contains_induced_c4(g), oracle_induced_c4(g)) << n;
    }
  }
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(k33()), 4);
  EXPECT_EQ(girth(prism()), 3);
  EXPECT_EQ(girth(Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}})), std::nullopt);
  EXPECT_EQ(girth(c6()), 6);
}

TEST(Girth, MatchesEdgeDeletionOracle) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const int expected = oracle_girth(g);
      const auto got = girth(g);
      ASSERT_EQ(got.value_or(0), expected);
    }
  }
}

TEST(Girth, FiveOrMoreImpliesC4FreeUpToSeven) {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto gi = girth(g);
      if (!gi || *gi >= 5) {
        ASSERT_FALSE(contains_induced_c4(g));
      }
    }
  }
}

TEST(BlowUp, Examples) {
  EXPECT_EQ(blow_up(Graph(1), 0, {"a", "b", "c"}), complete(3));

  Graph edge = Graph::from_edges(2, {{0, 1}});
  edge.set_labels({"a", "b"});
  const Graph tri = blow_up(edge, 0, {"a1", "a2"});
  EXPECT_EQ(tri, complete(3));
  EXPECT_EQ(tri.label(0), "b");
  EXPECT_EQ(tri.label(1), "a1");
  EXPECT_EQ(tri.label(2), "a2");
}

TEST(BlowUp, BlowingUpClassesRecoversTwinGraph) {
  const auto sub = induced_subgraph(twin_graph(), one_based_set(8, {1, 2, 3, 4, 5}));
  Graph g = sub.graph;
  g.set_labels({"1", "2", "3", "4", "5"});
  g = blow_up(g, 3, {"4", "7", "8"});
  int two = -1;
  for (int v = 0; v < g.n(); ++v)
    if (g.label(v) == "2") two = v;
  g = blow_up(g, two, {"2", "6"});
  EXPECT_EQ(by_numeric_label(g), twin_graph());
}

TEST(BlowUp, RejectsCollidingLabels) {
  Graph g = path3();
  g.set_labels({"a", "b", "c"});
  EXPECT_THROW(blow_up(g, 0, {"x", "c"}), InputError);
  EXPECT_THROW(blow_up(g, 0, {"x", "x"}), InputError);
  EXPECT_THROW(blow_up(g, 0, {}), InputError);
}

TEST(BlowUp, ContractingTheCliqueRestoresTheGraph) {
  std::mt19937_64 rng(3);
  for (const Graph& g : all_graphs(5)) {
    const int v = static_cast<int>(rng() % 5);
    const Graph big = blow_up(g, v, {"p", "q", "r"});
    // Keep one clique member, drop the other two.
    const auto keep = VertexSet::full(7) - VertexSet::of(7, {5, 6});
    ASSERT_TRUE(is_isomorphic(induced_subgraph(big, keep).graph, g));
  }
}

TEST(InducedSubgraph, Examples) {
  const auto ac = induced_subgraph(path3(), VertexSet::of(3, {0, 2}));
  EXPECT_EQ(ac.graph, Graph(2));
  EXPECT_EQ(ac.original_id, (std::vector<int>{0, 2}));

  const auto k = induced_subgraph(k33(), one_based_set(6, {1, 2, 4}));
  EXPECT_EQ(k.graph, Graph::from_edges(3, {{0, 2}, {1, 2}}));

  EXPECT_EQ(induced_subgraph(twin_graph(), VertexSet::full(8)).graph, twin_graph());
  EXPECT_THROW(induced_subgraph(path3(), VertexSet(3)), InputError);
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(is_isomorphic(c6(), two_k3()));
  EXPECT_FALSE(is_isomorphic(k33(), prism()));
  EXPECT_TRUE(is_isomorphic(twin_graph(), twin_graph()));
  EXPECT_THROW(is_isomorphic(Graph(11), Graph(11)), UnsupportedError);
}

TEST(Isomorphism, MatchesPermutationOracle) {
  std::mt19937_64 rng(5);
  const auto graphs = all_graphs(5);
  for (int i = 0; i < 400; ++i) {
    const Graph& g = graphs[rng() % graphs.size()];
    const Graph& h = graphs[rng() % graphs.size()];
    ASSERT_EQ(is_isomorphic(g, h), oracle_isomorphic(g, h));
  }
}

TEST(Permutation, OrbitsAndInverse) {
  const auto w = PermutationWitness::from_sigma({3, 4, 5, 0, 1, 2});
  ASSERT_EQ(w.orbits.size(), 3U);
  EXPECT_EQ(w.orbits[0], VertexSet::of(6, {0, 3}));
  EXPECT_EQ(w.cycle_notation(), "(0 3)(1 4)(2 5)");
  EXPECT_EQ(w.inverse(), w.sigma);

  const auto rot = PermutationWitness::from_sigma({1, 2, 0});
  EXPECT_EQ(rot.inverse(), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(PermutationWitness::from_sigma(rot.inverse()).orbits, rot.orbits);
  EXPECT_EQ(PermutationWitness::from_sigma({0, 1}).cycle_notation(), "()");
  EXPECT_THROW(PermutationWitness::from_sigma({0, 0}), InputError);
}

}  // namespace
}  // namespace nbrecon
