#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rcp/catalog.hpp"
#include "rcp/errors.hpp"
#include "rcp/graph.hpp"

using namespace rcp;

TEST(Graph, RejectsLoopsDuplicatesAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(65), std::invalid_argument);
}

TEST(Graph, EdgesAreSortedAndNormalised) {
  const Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(0, 2));
  EXPECT_EQ(g.edges()[2], Edge(1, 3));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.neighbours(1), (std::vector<Vertex>{0, 3}));
}

TEST(Graph, DeleteEdge) {
  const Graph g = catalog::cycle(4);
  const Graph h = delete_edge(g, Edge(0, 3));
  EXPECT_EQ(h, catalog::path(4));
  EXPECT_THROW(delete_edge(g, Edge(0, 2)), std::invalid_argument);
}

TEST(Graph, ContractEdgeRelabelsAboveRemovedSlot) {
  const Graph g = catalog::path(4);  // 0-1-2-3
  const Contraction c = contract_edge(g, Edge(1, 2));
  EXPECT_EQ(c.merged, 1u);
  EXPECT_EQ(c.removed, 2u);
  EXPECT_EQ(c.relabel, (std::vector<Vertex>{0, 1, 1, 2}));
  EXPECT_EQ(c.graph, catalog::path(3));
}

TEST(Graph, ContractionEdgeCountIdentity) {
  // m(G/e) = m(G) - 1 - |N(u) ∩ N(v)|
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 6, rng);
    for (const Edge& e : g.edges()) {
      const auto shared = std::popcount(g.neighbour_mask(e.u) & g.neighbour_mask(e.v));
      EXPECT_EQ(contract_edge(g, e).graph.size(), g.size() - 1 - shared);
    }
  }
}

TEST(Graph, CensusMatchesTupleEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 8, rng);
    const SubgraphCensus c = census(g);
    const auto o = oracle::count_subgraphs(g);
    EXPECT_EQ(c.m, g.size());
    EXPECT_EQ(c.tri, o.tri);
    EXPECT_EQ(c.ind_c4, o.ind_c4);
    EXPECT_EQ(c.k4, o.k4);
  }
}

TEST(Graph, CensusFixtures) {
  EXPECT_EQ(census(catalog::complete(4)), (SubgraphCensus{6, 4, 0, 1}));
  EXPECT_EQ(census(catalog::cycle(4)), (SubgraphCensus{4, 0, 1, 0}));
  EXPECT_EQ(census(catalog::complete_bipartite(2, 3)), (SubgraphCensus{6, 0, 3, 0}));
  EXPECT_EQ(census(catalog::path(2)), (SubgraphCensus{1, 0, 0, 0}));
}

TEST(Graph, AutomorphismsMatchPermutationSearch) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 7, rng);
    auto expected = oracle::all_automorphisms(g);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(automorphisms(g), expected);
  }
}

TEST(Graph, AutomorphismGroupSizesAndClosure) {
  EXPECT_EQ(automorphisms(catalog::cycle(7)).size(), 14u);
  EXPECT_EQ(automorphisms(catalog::complete(5)).size(), 120u);
  EXPECT_EQ(automorphisms(catalog::star(5)).size(), 24u);
  const auto group = automorphisms(catalog::cycle(6));
  EXPECT_EQ(group.front(), (Permutation{0, 1, 2, 3, 4, 5}));
  for (const auto& a : group) {
    for (const auto& b : group) {
      Permutation ab(a.size());
      for (std::size_t v = 0; v < a.size(); ++v) ab[v] = a[b[v]];
      EXPECT_TRUE(std::binary_search(group.begin(), group.end(), ab));
    }
  }
}

TEST(Graph, AutomorphismCap) {
  EXPECT_THROW(automorphisms(catalog::cycle(11)), CapError);
  EXPECT_NO_THROW(automorphisms(catalog::cycle(11), 11));
}

TEST(Graph, ComponentsAndConnectivity) {
  const Graph g(6, {{0, 3}, {1, 4}, {4, 5}});
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].to_original, (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(comps[1].to_original, (std::vector<Vertex>{1, 4, 5}));
  EXPECT_EQ(comps[1].graph, catalog::path(3));
  EXPECT_EQ(comps[2].to_original, (std::vector<Vertex>{2}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(catalog::cycle(5)));
}

TEST(Graph, Bipartition) {
  const auto b = bipartition(catalog::cycle(6));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->first, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(b->second, (std::vector<Vertex>{1, 3, 5}));
  EXPECT_FALSE(bipartition(catalog::cycle(5)));
  EXPECT_THROW(bipartition(catalog::empty(2)), std::invalid_argument);
}

TEST(Graph, DisjointUnionAndPermute) {
  const Graph u = disjoint_union(catalog::path(2), catalog::path(3));
  EXPECT_EQ(u, Graph(5, {{0, 1}, {2, 3}, {3, 4}}));
  const Graph p = permute(catalog::path(3), {2, 0, 1});
  EXPECT_EQ(p, Graph(3, {{2, 0}, {0, 1}}));
}
