#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rcp/catalog.hpp"
#include "rcp/chroma.hpp"
#include "rcp/coefficients.hpp"
#include "rcp/graph_io.hpp"

using namespace rcp;

TEST(Coefficients, MatchExpandedPolynomial) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const Graph g = oracle::random_graph(n, rng);
    const Restraint r = oracle::random_restraint(n, rng, {0, 1, 2, 3}, 5);
    const IntPolynomial p = restrained_poly(g, r);
    SCOPED_TRACE(to_graph6(g) + " " + to_literal(r));
    EXPECT_EQ(coeff_n1(g, r), unsigned_coefficient(p, n, n - 1));
    EXPECT_EQ(coeff_n2(g, r), unsigned_coefficient(p, n, n - 2));
    EXPECT_EQ(coeff_n3(g, r).total(), unsigned_coefficient(p, n, n - 3));
  }
}

TEST(Coefficients, EmptyRestraintReducesToChromaticCoefficients) {
  for (std::size_t n = 4; n <= 6; ++n) {
    for (const Graph& g : catalog::connected_graphs(n)) {
      const IntPolynomial p = chromatic_poly(g);
      const SubgraphCensus c = census(g);
      EXPECT_EQ(chromatic_h_n2(c), unsigned_coefficient(p, n, n - 2));
      EXPECT_EQ(chromatic_h_n3(c), unsigned_coefficient(p, n, n - 3));
      const auto b = coeff_n3(g, Restraint::none(n));
      EXPECT_EQ(b.total(), b.a0);
    }
  }
}

TEST(Coefficients, TriangleBreakdown) {
  const auto b = coeff_n3(catalog::cycle(3), Restraint{{1}, {1}, {1}});
  EXPECT_EQ(b.a0, 0);
  EXPECT_EQ(b.a1, 1);
  EXPECT_EQ(b.a2, 6);
  EXPECT_EQ(b.a3, 0);
  EXPECT_EQ(b.a4, -3);
  EXPECT_EQ(b.a5, 6);
  EXPECT_EQ(b.a6, -6);
  EXPECT_EQ(b.a7_prime, 3);
  EXPECT_EQ(b.a7_double_prime, -3);
  EXPECT_EQ(b.a8_prime, BigRational(3, 2));
  EXPECT_EQ(b.a8_double_prime, BigRational(1, 2));
  EXPECT_EQ(b.a8, 2);
  EXPECT_EQ(b.total(), 6);
}

TEST(Coefficients, A7DoublePrimeCountsSharedColoursAcrossCommonNeighbours) {
  const Graph c4 = catalog::cycle(4);
  // Each vertex has one pair of neighbours; opposite vertices share their
  // colour twice over (once via each common neighbour).
  EXPECT_EQ(a7_double_prime(c4, Restraint{{1}, {2}, {1}, {2}}), -4);
  EXPECT_EQ(a7_double_prime(c4, Restraint{{1}, {2}, {1}, {3}}), -2);
  EXPECT_EQ(a7_double_prime(c4, Restraint{{1}, {2}, {3}, {4}}), 0);
}

TEST(Coefficients, UndefinedBelowThreeVertices) {
  EXPECT_THROW(coeff_n3(catalog::path(2), Restraint{{1}, {2}}), std::invalid_argument);
  EXPECT_THROW(coeff_n1(catalog::path(2), Restraint{{1}}), std::invalid_argument);
}
