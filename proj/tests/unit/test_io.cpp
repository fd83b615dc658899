#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kcut/bench.hpp"
#include "kcut/json_io.hpp"

using namespace kcut;
using namespace kcut::fixtures;

TEST(Generate, CycleOfCliquesShape) {
  Graph g = cycle_of_cliques(3, 5, 2);
  EXPECT_EQ(g.num_vertices(), 15);
  EXPECT_EQ(g.num_edges(), 36);
  EXPECT_THROW(cycle_of_cliques(2, 5, 2), PreconditionError);
}

TEST(Generate, BridgedCliquesShape) {
  Graph g = bridged_cliques(4, 4, 1);
  EXPECT_EQ(g.num_edges(), 13);
  EXPECT_TRUE(g.find_edge(0, 4).has_value());
  EXPECT_EQ(bridged_cliques(5, 5, 2).num_edges(), 22);
}

TEST(Generate, GnpIsDeterministicAndConnected) {
  Graph a = gnp(20, 0.2, 42);
  EXPECT_EQ(a, gnp(20, 0.2, 42));
  EXPECT_TRUE(is_connected(a));
  EXPECT_FALSE(a == gnp(20, 0.2, 43));
}

TEST(Generate, SpecStrings) {
  InstanceSpec s = InstanceSpec::parse("gnp:8,0.5,7");
  EXPECT_EQ(s.family, InstanceSpec::Gnp);
  EXPECT_EQ(s.a, 8);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(InstanceSpec::parse(s.str()).str(), s.str());
  EXPECT_EQ(generate(InstanceSpec::parse("cycle-of-cliques:3,5,2")), cycle_of_cliques(3, 5, 2));
  EXPECT_THROW(InstanceSpec::parse("petersen"), PreconditionError);
  EXPECT_THROW(InstanceSpec::parse("gnp:8,x,7"), PreconditionError);
}

TEST(Json, OneBasedIdsAndRationals) {
  Graph g = ex1();
  Json loads = loads_json(g, ideal_loads(g));
  EXPECT_EQ(vertex_set_json({0, 3}), Json::parse("[1, 4]"));
  Json edges = edge_list_json(g, {*g.find_edge(0, 4)});
  EXPECT_EQ(edges, Json::parse("[[1, 5]]"));
  Json chain = chain_json(g, loadsweep_psp(g, {}));
  EXPECT_EQ(chain["levels"][0]["lambda"], "1/1");
  EXPECT_FALSE(loads.dump().empty());
}

TEST(Json, SolutionRecord) {
  Graph g = ex1();
  SolverConfig cfg;
  cfg.mode = SolveMode::PspKt;
  Json j = solution_json(g, min_kcut(g, 3, cfg));
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["edges"].size(), 4u);
  EXPECT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["audit"]["branch"], "psp-kt");
  EXPECT_TRUE(j.contains("stats"));
}

TEST(Bench, Ex1Suite) {
  Json suite = Json::parse(R"({"records": [{"instance": "bridged-cliques:4,4,1", "k": [2, 3, 4], "mode": "psp-kt"}]})");
  auto entries = parse_suite(suite);
  ASSERT_EQ(entries.size(), 3u);
  auto records = run_bench(entries, {}, 2);
  ASSERT_EQ(records.size(), 3u);
  const Capacity expected[] = {1, 4, 6};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(records[i].index, i);
    EXPECT_TRUE(records[i].ok);
    EXPECT_TRUE(records[i].verified);
    EXPECT_EQ(records[i].value, expected[i]);
  }
  EXPECT_EQ(bench_csv_header().rfind("# kcut-bench-v1", 0), 0u);
  EXPECT_EQ(bench_json(records)["records"].size(), 3u);
}

TEST(Bench, RingSuite) {
  Json suite = Json::parse(R"({"records": [{"instance": "cycle-of-cliques:4,30,2", "k": 4, "trim": "compact"}]})");
  auto records = run_bench(parse_suite(suite), {}, 1);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_TRUE(records[0].ok) << records[0].error;
  EXPECT_EQ(records[0].value, 8);
  EXPECT_TRUE(records[0].leaf_bound_ok);
}

TEST(Bench, BadSuite) {
  EXPECT_THROW(parse_suite(Json::parse(R"({"rows": []})")), PreconditionError);
  auto records = run_bench(parse_suite(Json::parse(R"({"records": [{"instance": "bridged-cliques:4,4,1", "k": 12}]})")), {});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].ok);
  EXPECT_FALSE(records[0].error.empty());
}
