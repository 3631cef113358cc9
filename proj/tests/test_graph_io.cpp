#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rcp/catalog.hpp"
#include "rcp/errors.hpp"
#include "rcp/graph_io.hpp"

using namespace rcp;

TEST(GraphIo, EdgeListParses) {
  const Graph g = parse_edge_list("# a path\nn 3\n0 1\n\n1 2\n");
  EXPECT_EQ(g, catalog::path(3));
  EXPECT_EQ(parse_edge_list(to_edge_list(catalog::cycle(5))), catalog::cycle(5));
}

TEST(GraphIo, EdgeListErrors) {
  EXPECT_THROW(parse_edge_list("0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 1 5\n"), ParseError);
}

TEST(GraphIo, Graph6KnownStrings) {
  EXPECT_EQ(to_graph6(catalog::complete(3)), "Bw");
  EXPECT_EQ(to_graph6(catalog::cycle(4)), "Cl");
  EXPECT_EQ(to_graph6(catalog::path(4)), "Ch");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), catalog::complete(3));
  EXPECT_EQ(parse_graph6("Bw\n"), catalog::complete(3));
}

TEST(GraphIo, Graph6RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(trial % 20, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(GraphIo, Graph6Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);     // missing body
  EXPECT_THROW(parse_graph6("Bww"), ParseError);   // too long
  EXPECT_THROW(parse_graph6("Bx"), ParseError);    // padding bits set
  EXPECT_THROW(parse_graph6("~"), ParseError);     // orders above 62
}
