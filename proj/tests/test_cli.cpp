#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "rcp/cli.hpp"
#include "rcp/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rcp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PolyJson) {
  const auto r = run({"poly", "--graph", "C3", "--restraint", "[{1},{2},{3}]", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rendered"], "x^3 - 6x^2 + 14x - 13");
  EXPECT_EQ(j["m_value"], 3);
}

TEST(Cli, PolyJsonRoundTrips) {
  const auto r = run({"poly", "--graph", "P4", "--restraint", "[{1},{2},{2},{1}]", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto p = rcp::polynomial_from_json(j["polynomial"]);
  EXPECT_EQ(rcp::to_coefficient_string(p), "[16, -28, 20, -7, 1]");
  EXPECT_EQ(rcp::to_descending_string(p), j["rendered"]);
}

TEST(Cli, ChromaticWithoutRestraint) {
  const auto r = run({"poly", "--graph", "K3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("polynomial: x^3 - 3x^2 + 2x\n"), std::string::npos) << r.out;
}

TEST(Cli, ClassesOnSquare) {
  const auto r = run({"classes", "--graph", "C4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["class_count"], 7);
}

TEST(Cli, PolyNotesInvalidEvaluationPoint) {
  const auto r = run({"poly", "--graph", "C3", "--restraint", "[{1},{2},{3}]", "--x", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("note: x < M"), std::string::npos);
}

TEST(Cli, GraphFormats) {
  const auto a = run({"poly", "--graph", "Bw", "--json"});
  const auto b = run({"poly", "--graph", "n 3;0 1;1 2;0 2", "--json"});
  const auto c = run({"poly", "--graph", "K3", "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, CountAndCoeffs) {
  const auto c = run({"count", "--graph", "C3", "--restraint", "[{1},{2},{3}]", "--x", "2", "--json"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(nlohmann::json::parse(c.out)["count"], "0");
  const auto k = run({"coeffs", "--graph", "C4", "--restraint", "[{1},{2},{1},{2}]", "--json"});
  ASSERT_EQ(k.code, 0) << k.err;
  const auto j = nlohmann::json::parse(k.out);
  EXPECT_TRUE(j["matches_polynomial"].get<bool>());
  EXPECT_EQ(j["a_n_3"], "47");
}

TEST(Cli, ExtremalIsDeterministic) {
  const std::vector<std::string> args{"extremal", "--graph", "C5", "--json"};
  const auto a = run(args);
  const auto b = run({"extremal", "--graph", "C5", "--json", "--workers", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyAndConjecture) {
  const auto v = run({"verify", "--theorem", "bipartite", "--n-max", "4"});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  const auto c = run({"conjecture", "--n", "7", "--json"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(nlohmann::json::parse(c.out)["winner_matches_reference"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, rcp::cli::kInputError);
  EXPECT_EQ(run({"poly"}).code, rcp::cli::kInputError);
  EXPECT_EQ(run({"poly", "--graph", "Bx"}).code, rcp::cli::kInputError);
  EXPECT_EQ(run({"poly", "--graph", "C3", "--restraint", "[{1}]"}).code, rcp::cli::kInputError);
  EXPECT_EQ(run({"classes", "--graph", "C9"}).code, rcp::cli::kCapExceeded);
  EXPECT_EQ(run({"--help"}).code, rcp::cli::kOk);
}
