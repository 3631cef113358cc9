#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "rcp/catalog.hpp"
#include "rcp/extremal.hpp"
#include "rcp/graph_io.hpp"
#include "rcp/json_io.hpp"
#include "rcp/report_store.hpp"

using namespace rcp;

TEST(Extremal, WorkerCountDoesNotChangeReport) {
  ChromaEngine a, b;
  for (const Graph& g : {catalog::cycle(5), catalog::complete_bipartite(2, 3), catalog::star(5)}) {
    EXPECT_EQ(find_extremal(g, 1, a, {.workers = 1}), find_extremal(g, 1, b, {.workers = 3}));
  }
}

TEST(Extremal, SummaryAgreesWithPairwiseComparison) {
  ChromaEngine engine;
  for (const Graph& g : catalog::connected_graphs(4)) {
    const auto data = class_polynomials(g, 1, engine);
    const auto report = summarize(g, 1, data);
    EXPECT_EQ(report.class_count, data.classes.size());
    for (std::size_t i = 0; i < data.classes.size(); ++i) {
      const bool is_max = std::find(report.max_classes.begin(), report.max_classes.end(),
                                    data.classes[i]) != report.max_classes.end();
      bool beaten = false;
      for (const auto& q : data.polys) beaten = beaten || eventually_less(data.polys[i], q);
      EXPECT_EQ(is_max, !beaten);
    }
    for (const auto& w : report.max_witnesses) EXPECT_GT(w.deficit.coefficient, 0);
    EXPECT_EQ(report.max_witnesses.size() + report.max_classes.size(), report.class_count);
  }
  EXPECT_THROW(summarize(catalog::path(2), 1, {}), std::invalid_argument);
}

TEST(Extremal, CompleteGraphHasSingleClassPerDistinctCount) {
  // On K_n every 1-restraint class is determined by its colour multiplicities;
  // the all-distinct class is the unique maximiser.
  ChromaEngine engine;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto report = find_extremal(catalog::complete(n), 1, engine);
    ASSERT_EQ(report.max_classes.size(), 1u);
    std::vector<ColourSet> distinct;
    for (Colour c = 1; c <= n; ++c) distinct.push_back({c});
    EXPECT_EQ(report.max_classes[0].canon, Restraint(distinct));
  }
}

TEST(Extremal, TiesAreKeptOnPath) {
  ChromaEngine engine;
  const auto data = class_polynomials(catalog::path(4), 1, engine);
  std::size_t equal_pairs = 0;
  for (std::size_t i = 0; i < data.polys.size(); ++i)
    for (std::size_t j = i + 1; j < data.polys.size(); ++j) equal_pairs += data.polys[i] == data.polys[j];
  EXPECT_GT(equal_pairs, 0u);
}

TEST(Extremal, VerifiersOnSmallCatalog) {
  ChromaEngine engine;
  const auto provider = direct_provider(engine, {});
  const auto graphs = catalog::connected_graphs_up_to(4);
  EXPECT_EQ(verify_min_theorem(graphs, 1, provider).violations(), 0u);
  EXPECT_EQ(verify_properness(graphs, 1, provider).violations(), 0u);
  const auto bip = verify_bipartite_max(graphs, 1, provider);
  EXPECT_EQ(bip.violations(), 0u);
  EXPECT_GT(bip.skipped(), 0u);  // triangles and K4 are skipped
}

TEST(Extremal, MinTheoremOnDisconnectedGraph) {
  ChromaEngine engine;
  const auto provider = direct_provider(engine, {});
  const std::vector<Graph> graphs{disjoint_union(catalog::path(2), catalog::path(2))};
  const auto report = verify_min_theorem(graphs, 1, provider);
  EXPECT_EQ(report.violations(), 0u) << report.entries[0].message;
}

TEST(Extremal, VerifierFlagsWrongProvider) {
  // A provider that lies about R_max must be caught.
  ChromaEngine engine;
  const auto honest = direct_provider(engine, {});
  const ReportProvider liar = [&](const Graph& g, std::size_t k) {
    auto r = honest(g, k);
    r.max_classes = r.min_classes;
    return r;
  };
  const std::vector<Graph> graphs{catalog::cycle(4)};
  EXPECT_GT(verify_properness(graphs, 1, liar).violations(), 0u);
  EXPECT_GT(verify_bipartite_max(graphs, 1, liar).violations(), 0u);
  EXPECT_GT(verify_min_theorem(graphs, 1, liar).violations(), 0u);
}

TEST(Extremal, A7ConditionOnCycles) {
  ChromaEngine engine;
  const auto provider = direct_provider(engine, {});
  const A7Report c4 = verify_a7_condition(catalog::cycle(4), 1, provider);
  EXPECT_EQ(c4.proper_classes.size(), 3u);
  EXPECT_TRUE(c4.condition_holds);
  EXPECT_TRUE(c4.unique_minimiser);
  // On C7 the minimum is shared by two classes, only one of which wins.
  const A7Report c7 = verify_a7_condition(catalog::cycle(7), 1, provider);
  EXPECT_TRUE(c7.condition_holds);
  EXPECT_FALSE(c7.unique_minimiser);
  EXPECT_EQ(c7.minimisers.size(), 2u);
}

TEST(Extremal, CyclePatterns) {
  const CyclePattern p7 = odd_cycle_pattern_literal(7);
  ASSERT_TRUE(p7.well_defined());
  EXPECT_EQ(p7.restraint(), (Restraint{{1}, {2}, {1}, {3}, {2}, {3}, {2}}));
  EXPECT_EQ(odd_cycle_pattern_repaired(7), p7.restraint());
  const CyclePattern p5 = odd_cycle_pattern_literal(5);
  EXPECT_FALSE(p5.well_defined());
  EXPECT_THROW(p5.restraint(), std::logic_error);
  for (std::size_t n = 5; n <= 21; n += 2) {
    const Restraint r = odd_cycle_pattern_repaired(n);
    EXPECT_TRUE(is_proper(catalog::cycle(n), r)) << n;
    const CyclePattern lit = odd_cycle_pattern_literal(n);
    if (lit.well_defined()) EXPECT_EQ(lit.restraint(), r);
    EXPECT_EQ(lit.well_defined(), n % 4 == 3);
  }
}

TEST(Extremal, ConjectureArguments) {
  ChromaEngine engine;
  EXPECT_THROW(check_conjecture(6, engine), std::invalid_argument);
  EXPECT_THROW(check_conjecture(3, engine), std::invalid_argument);
}

TEST(ReportStore, JsonRoundTripAndResume) {
  ChromaEngine engine;
  const ExtremalReport report = find_extremal(catalog::cycle(5), 1, engine);
  EXPECT_EQ(report_from_json(report_to_json(report)), report);

  const auto dir = std::filesystem::temp_directory_path() / "rcp_store_test";
  std::filesystem::remove_all(dir);
  {
    ResultStore store(dir);
    int calls = 0;
    const auto provider = stored_provider(store, [&](const Graph& g, std::size_t k) {
      ++calls;
      return find_extremal(g, k, engine);
    });
    provider(catalog::cycle(5), 1);
    provider(catalog::cycle(5), 1);
    EXPECT_EQ(calls, 1);
    EXPECT_EQ(store.size(), 1u);
  }
  ResultStore reopened(dir);
  ASSERT_EQ(reopened.size(), 1u);
  EXPECT_EQ(reopened.find(to_graph6(catalog::cycle(5)), 1), report);
  std::filesystem::remove_all(dir);
}

TEST(ReportStore, PolynomialJsonKeepsBigCoefficients) {
  const IntPolynomial p{BigInt("-123456789012345678901234567890"), 1};
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(p)), p);
}
