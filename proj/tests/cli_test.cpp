#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>
#include <json.hpp>

#include "otfgraph/cli.hpp"

using namespace otfgraph;

namespace {

RunConfig config(const std::string& command, Node n) {
  RunConfig cfg;
  cfg.command = command;
  cfg.n = n;
  return cfg;
}

std::string run(const RunConfig& cfg, int expected_code = kExitOk) {
  std::ostringstream out;
  EXPECT_EQ(run_command(cfg, out), expected_code);
  return out.str();
}

}  // namespace

TEST(Cli, TwoNodeTranscript) {
  EXPECT_EQ(run(config("sample", 2)), "q 1 -> 1\nq 1 -> 2\nq 1 -> 3\nq 2 -> 1\nq 2 -> 3\n");
}

TEST(Cli, SampleJson) {
  RunConfig cfg = config("sample", 2);
  cfg.output = OutputFormat::json;
  const auto j = nlohmann::json::parse(run(cfg));
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[2]["q"], 1);
  EXPECT_EQ(j[2]["r"], 3);
}

TEST(Cli, Deterministic) {
  for (const char* command : {"sample", "batch"}) {
    for (Model m : {Model::ba, Model::z, Model::rrt}) {
      RunConfig cfg = config(command, 40);
      cfg.model = m;
      cfg.seed = 123;
      cfg.schedule = "roundrobin";
      EXPECT_EQ(run(cfg), run(cfg));
    }
  }
}

TEST(Cli, QueriesFile) {
  const std::string path = ::testing::TempDir() + "otfgraph_queries.txt";
  {
    std::ofstream f(path);
    f << "2\n\n2\n1\n   1\n1\n2\n";
  }
  RunConfig cfg = config("sample", 2);
  cfg.schedule = "file";
  cfg.queries_file = path;
  EXPECT_EQ(run(cfg), "q 2 -> 1\nq 2 -> 3\nq 1 -> 1\nq 1 -> 2\nq 1 -> 3\nq 2 -> 3\n");
  std::remove(path.c_str());
}

TEST(Cli, QueryParsing) {
  std::istringstream good("3\n\n  7 \n");
  EXPECT_EQ(parse_queries(good, 10), (std::vector<Node>{3, 7}));
  std::istringstream bad("3\n\nx4\n");
  try {
    parse_queries(bad, 10);
    FAIL() << "no parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream range("3\n11\n");
  EXPECT_THROW(parse_queries(range, 10), ParseError);
  std::istringstream zero("0\n");
  EXPECT_THROW(parse_queries(zero, 10), ParseError);
}

TEST(Cli, ConfigValidation) {
  RunConfig cfg = config("sample", 5);
  cfg.toss_exponent = 1.0;
  EXPECT_THROW(run_command(cfg, std::cout), std::invalid_argument);
  cfg = config("sample", 0);
  EXPECT_THROW(run_command(cfg, std::cout), std::invalid_argument);
  cfg = config("sample", 5);
  cfg.schedule = "file";
  EXPECT_THROW(run_command(cfg, std::cout), std::invalid_argument);
  cfg = config("frobnicate", 5);
  EXPECT_THROW(run_command(cfg, std::cout), std::invalid_argument);
}

TEST(Cli, CompareReport) {
  RunConfig cfg = config("compare", 5);
  cfg.trials = 20'000;
  cfg.output = OutputFormat::json;
  const auto j = nlohmann::json::parse(run(cfg));
  EXPECT_EQ(j["model"], "ba");
  ASSERT_EQ(j["tests"].size(), 4u);
  EXPECT_EQ(j["tests"][0]["name"], "ba_vs_z_exact");
  EXPECT_EQ(j["tests"][0]["tv"], 0.0);
  for (const auto& t : j["tests"]) EXPECT_TRUE(t["pass"].get<bool>()) << t.dump();
}

TEST(Cli, CompareTooLarge) {
  EXPECT_THROW(run_command(config("compare", 9), std::cout), std::invalid_argument);
}

TEST(Cli, StatsReport) {
  RunConfig cfg = config("stats", 6);
  cfg.trials = 2000;
  cfg.output = OutputFormat::json;
  const auto j = nlohmann::json::parse(run(cfg));
  for (const char* key : {"model", "n", "seeds", "tv", "chi2_p", "degree_hist", "height",
                          "max_indeg", "bits_per_query_mean", "time_per_query_ns"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  std::uint64_t nodes = 0;
  for (const auto& [d, c] : j["degree_hist"].items()) nodes += c.get<std::uint64_t>();
  EXPECT_EQ(nodes, 6u * 2000u);
  EXPECT_GT(j["chi2_p"].get<double>(), 1e-3);
}

TEST(Cli, BenchSmall) {
  RunConfig cfg = config("bench", 1'000'000);
  cfg.trials = 1000;
  cfg.output = OutputFormat::json;
  const auto j = nlohmann::json::parse(run(cfg));
  EXPECT_EQ(j["queries"], 1000);
  EXPECT_EQ(j["trivial_query_bits"], 0);
  EXPECT_LT(j["time_per_query_ns"].get<double>(), 1e6);
}

TEST(Cli, BenchTrivialQueriesFree) {
  const BenchResult r = run_bench(Model::ba, 50, 3, 5000);
  EXPECT_GT(r.trivial_queries, 0u);
  EXPECT_EQ(r.trivial_query_bits, 0u);
}
