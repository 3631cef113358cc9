#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rcp/catalog.hpp"
#include "rcp/errors.hpp"
#include "rcp/restraint.hpp"

using namespace rcp;

TEST(Restraint, NormalisesSets) {
  const Restraint r{{3, 1, 3}, {}};
  EXPECT_EQ(r[0], (ColourSet{1, 3}));
  EXPECT_THROW(Restraint({{0}}), std::invalid_argument);
  EXPECT_EQ(m_value(r), 3u);
  EXPECT_EQ(m_value(Restraint::none(3)), 0u);
}

TEST(Restraint, KRestraintPredicate) {
  EXPECT_TRUE(is_k_restraint(Restraint{{1}, {2}}, 1));
  EXPECT_FALSE(is_k_restraint(Restraint{{1}, {3}}, 1));  // colour above k*n
  EXPECT_FALSE(is_k_restraint(Restraint{{1, 2}, {3}}, 1));
}

TEST(Restraint, ConstantAndAlternating) {
  EXPECT_EQ(constant_restraint(catalog::path(3), 2), (Restraint{{1, 2}, {1, 2}, {1, 2}}));
  EXPECT_EQ(alternating_restraint(catalog::path(3), 1), (Restraint{{1}, {2}, {1}}));
  EXPECT_EQ(alternating_restraint(catalog::cycle(4), 2), (Restraint{{1, 2}, {3, 4}, {1, 2}, {3, 4}}));
  EXPECT_THROW(alternating_restraint(catalog::cycle(5), 1), std::invalid_argument);
  EXPECT_THROW(alternating_restraint(catalog::empty(2), 1), std::invalid_argument);
}

TEST(Restraint, Properness) {
  const Graph c4 = catalog::cycle(4);
  EXPECT_TRUE(is_proper(c4, Restraint{{1}, {2}, {1}, {2}}));
  EXPECT_FALSE(is_proper(c4, Restraint{{1}, {1}, {2}, {3}}));
}

TEST(Restraint, FirstUseNormalForm) {
  EXPECT_EQ(first_use_normal_form(Restraint{{5}, {2, 7}, {5}}), (Restraint{{1}, {2, 3}, {1}}));
}

TEST(Restraint, LiteralRoundTripAndParse) {
  const Restraint r{{1}, {2, 3}, {}};
  EXPECT_EQ(to_literal(r), "[{1},{2,3},{}]");
  EXPECT_EQ(parse_restraint(to_literal(r)), r);
  EXPECT_EQ(parse_restraint("[[1],[2,3],[]]"), r);
  EXPECT_EQ(parse_restraint(" [ {1} , {2, 3}, { } ] "), r);
  EXPECT_THROW(parse_restraint("[{1},{0}]"), ParseError);
  EXPECT_THROW(parse_restraint("[{1},"), ParseError);
  EXPECT_THROW(parse_restraint("{1}"), ParseError);
}

TEST(Restraint, PathEquivalenceExample) {
  const Graph p3 = catalog::path(3);
  const Restraint r1{{1}, {2}, {3}}, r2{{2}, {1}, {4}}, r3{{1}, {1}, {2}}, r4{{3}, {2}, {2}};
  EXPECT_TRUE(equivalent(p3, r1, r2));
  EXPECT_TRUE(equivalent(p3, r3, r4));
  EXPECT_FALSE(equivalent(p3, r1, r3));
}

TEST(Restraint, CanonicalFormDecidesBruteForceEquivalence) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Graph g = oracle::random_graph(n, rng);
    const Restraint a = oracle::random_restraint(n, rng, {1}, n);
    const Restraint b = oracle::random_restraint(n, rng, {1}, n);
    EXPECT_EQ(equivalent(g, a, b), oracle::brute_equivalent(g, a, b));
    // Any automorphic image with renamed colours lands in the same class.
    const auto group = automorphisms(g);
    const auto& p = group[trial % group.size()];
    std::vector<ColourSet> renamed;
    const Restraint moved = pull_back(a, p);
    for (const auto& s : moved.sets()) renamed.push_back({s[0] + 10});
    EXPECT_EQ(canonicalize(g, a).canon, canonicalize(g, Restraint(renamed)).canon);
  }
}

TEST(Restraint, EnumerationCountsOnCycles) {
  EXPECT_EQ(enumerate_k_restraints(catalog::cycle(3), 1).size(), 3u);
  EXPECT_EQ(enumerate_k_restraints(catalog::cycle(4), 1).size(), 7u);
  // Simple restraints on K_n correspond to integer partitions of n.
  EXPECT_EQ(enumerate_k_restraints(catalog::complete(5), 1).size(), 7u);
  EXPECT_EQ(enumerate_k_restraints(catalog::complete(6), 1).size(), 11u);
}

TEST(Restraint, EnumerationCoversEveryRestraintOnce) {
  // Brute force: every simple restraint with colours 1..n, bucketed by the
  // brute-force equivalence relation.
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : catalog::connected_graphs(n)) {
      const auto classes = enumerate_k_restraints(g, 1);
      std::set<Restraint> canons;
      for (const auto& c : classes) {
        EXPECT_EQ(c.k, 1u);
        EXPECT_TRUE(is_k_restraint(c.canon, 1));
        EXPECT_EQ(canonicalize(g, c.canon).canon, c.canon);
        canons.insert(c.canon);
      }
      EXPECT_EQ(canons.size(), classes.size());
      std::vector<Colour> c(n, 1);
      std::vector<Restraint> reps;
      while (true) {
        std::vector<ColourSet> sets;
        for (auto v : c) sets.push_back({v});
        const Restraint r(sets);
        EXPECT_TRUE(canons.count(canonicalize(g, r).canon));
        bool found = false;
        for (const auto& rep : reps) found = found || oracle::brute_equivalent(g, rep, r);
        if (!found) reps.push_back(r);
        std::size_t i = 0;
        while (i < n && c[i] == n) c[i++] = 1;
        if (i == n) break;
        ++c[i];
      }
      EXPECT_EQ(reps.size(), classes.size()) << "graph on " << n << " vertices";
    }
  }
}

TEST(Restraint, EnumerationK2OnSmallGraphs) {
  for (const Graph& g : {catalog::path(2), catalog::path(3), catalog::complete(3)}) {
    for (const auto& c : enumerate_k_restraints(g, 2)) EXPECT_TRUE(is_k_restraint(c.canon, 2));
  }
  // K2 with 2-sets: equal, sharing one colour, or disjoint.
  EXPECT_EQ(enumerate_k_restraints(catalog::path(2), 2).size(), 3u);
}

TEST(Restraint, EnumerationCaps) {
  EXPECT_THROW(enumerate_k_restraints(catalog::cycle(9), 1), CapError);
  EXPECT_THROW(enumerate_k_restraints(catalog::cycle(6), 2), CapError);
  EXPECT_THROW(enumerate_k_restraints(catalog::cycle(5), 3), CapError);
}

TEST(Restraint, TransportUnionsMergedSets) {
  const Graph g = catalog::path(4);
  const Restraint r{{1}, {2}, {3}, {1}};
  const Contraction c = contract_edge(g, Edge(1, 2));
  EXPECT_EQ(transport(r, c), (Restraint{{1}, {2, 3}, {1}}));
  const std::vector<Vertex> bad{0, 1, 2, 2};
  EXPECT_THROW(transport(r, bad, 1, 1, 2), std::invalid_argument);
}
