#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kcut/oracle.hpp"
#include "kcut/solver.hpp"

using namespace kcut;
using namespace kcut::fixtures;

namespace {

SolverConfig psp_kt(TrimMode trim = TrimMode::Safe) {
  SolverConfig cfg;
  cfg.mode = SolveMode::PspKt;
  cfg.trim = trim;
  return cfg;
}

}  // namespace

TEST(Solver, Ex1Values) {
  Graph g = ex1();
  const Capacity expected[] = {1, 4, 6};
  for (int k = 2; k <= 4; ++k) {
    Solution s = min_kcut(g, k, psp_kt());
    EXPECT_EQ(s.value, expected[k - 2]) << "k " << k;
    EXPECT_EQ(s.components.size(), k);
    EXPECT_TRUE(verify_solution(g, s, k).ok);
    EXPECT_EQ(s.audit.branch, "psp-kt");
  }
}

TEST(Solver, Ex1Audit) {
  Graph g = ex1();
  Solution s3 = min_kcut(g, 3, psp_kt());
  EXPECT_EQ(s3.audit.j, 2);
  EXPECT_EQ(s3.audit.R, 1);
  EXPECT_EQ(s3.audit.theta_j, Capacity(4));
  EXPECT_EQ(s3.audit.prefix, (std::vector<EdgeId>{*g.find_edge(0, 4)}));
  EXPECT_EQ(s3.audit.r, 1);
  Solution s4 = min_kcut(g, 4, psp_kt());
  EXPECT_EQ(s4.audit.r, 2);
  EXPECT_TRUE(s4.audit.borders.empty());
  Solution s2 = min_kcut(g, 2, psp_kt());
  EXPECT_EQ(s2.audit.j, 1);
  EXPECT_EQ(s2.audit.borders.size(), 1u);
}

TEST(Solver, MatchesOracleOnRandomGraphs) {
  for (TrimMode trim : {TrimMode::Safe, TrimMode::Compact}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      int n = 7 + static_cast<int>(seed % 3);
      Graph g = gnp(n, 0.45, seed);
      for (int k = 2; k <= 5; ++k) {
        Solution s = min_kcut(g, k, psp_kt(trim));
        OracleResult o = brute_min_kcut(g, k);
        EXPECT_EQ(Rational(s.value), o.value) << to_string(trim) << " seed " << seed << " k " << k;
        EXPECT_TRUE(verify_solution(g, s, k).ok);
        EXPECT_TRUE(s.stats.leaf_bound_ok);
      }
    }
  }
}

TEST(Solver, ForestBordersMissAnOptimum) {
  Graph g = gnp(9, 0.3, 609);
  SolverConfig cfg = psp_kt();
  EXPECT_EQ(min_kcut(g, 4, cfg).value, 5);
  cfg.borders = BorderFamily::Forest;
  EXPECT_GT(min_kcut(g, 4, cfg).value, 5);
}

TEST(Solver, RingOfCliques) {
  Graph g = cycle_of_cliques(4, 8, 2);
  for (TrimMode trim : {TrimMode::Safe, TrimMode::Compact}) {
    Solution s = min_kcut(g, 4, psp_kt(trim));
    EXPECT_EQ(s.value, 8);
    EXPECT_EQ(s.components.size(), 4);
  }
}

TEST(Solver, DeterministicAcrossRunsAndThreads) {
  Graph g = gnp(10, 0.5, 77);
  SolverConfig cfg = psp_kt();
  Solution a = min_kcut(g, 4, cfg);
  Solution b = min_kcut(g, 4, cfg);
  cfg.threads = 3;
  Solution c = min_kcut(g, 4, cfg);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.edges, c.edges);
  EXPECT_EQ(a.components, c.components);
}

TEST(Solver, InputErrors) {
  EXPECT_THROW(min_kcut(ex1(), 1), PreconditionError);
  EXPECT_THROW(min_kcut(ex1(), 9), PreconditionError);
  EXPECT_THROW(min_kcut(Graph(4, {{0, 1}, {2, 3}}), 2), PreconditionError);
  SolverConfig bad;
  bad.threads = 0;
  EXPECT_THROW(min_kcut(ex1(), 2, bad), PreconditionError);
  EXPECT_THROW(parse_solve_mode("fast"), PreconditionError);
  EXPECT_EQ(parse_solve_mode("psp-kt"), SolveMode::PspKt);
}

TEST(Solver, OracleMode) {
  SolverConfig cfg;
  cfg.mode = SolveMode::Oracle;
  Solution s = min_kcut(ex1(), 3, cfg);
  EXPECT_EQ(s.value, 4);
  EXPECT_EQ(s.audit.branch, "oracle");
  EXPECT_THROW(min_kcut(cycle(14), 3, cfg), CapabilityError);
}

TEST(Solver, AutoSmallLambdaBranch) {
  Solution small = min_kcut(cycle(8), 3);
  EXPECT_EQ(small.value, 3);
  EXPECT_EQ(small.audit.branch, "small-lambda");
  EXPECT_EQ(small.audit.lambda_tilde, 2);

  EXPECT_THROW(min_kcut(cycle(20), 3), CapabilityError);

  SolverConfig cfg;
  bool called = false;
  cfg.small_lambda = [&](const Graph& g, int k) -> std::optional<Solution> {
    called = true;
    return min_kcut(g, k, psp_kt());
  };
  Solution plugged = min_kcut(cycle(20), 3, cfg);
  EXPECT_TRUE(called);
  EXPECT_EQ(plugged.value, 3);
  EXPECT_EQ(plugged.audit.branch, "small-lambda");
}

TEST(Solver, AutoLargeLambdaBranch) {
  Solution s = min_kcut(complete(6), 3);
  EXPECT_EQ(s.audit.branch, "psp-kt");
  EXPECT_EQ(s.value, 9);
  EXPECT_GE(s.audit.theta_kernel, s.audit.lambda_tilde);
}

TEST(Solver, ThresholdSelection) {
  Graph g = double_k5();
  SolverConfig cfg;
  PSPChain chain = solver_psp(g, cfg);
  ThresholdChoice c = meta_threshold_select(g, chain, 3, cfg);
  EXPECT_EQ(c.branch, ThresholdChoice::SmallLambda);
  EXPECT_EQ(c.lambda_tilde, 2);
  cfg.mode = SolveMode::PspKt;
  c = meta_threshold_select(g, chain, 3, cfg);
  EXPECT_EQ(c.branch, ThresholdChoice::LargeLambda);
  EXPECT_EQ(c.theta, 6);
  cfg.mode = SolveMode::Auto;
  ThresholdChoice small = meta_threshold_select(cycle(9), solver_psp(cycle(9), cfg), 3, cfg);
  EXPECT_EQ(small.branch, ThresholdChoice::SmallLambda);
  EXPECT_EQ(small.theta, 2);
}

TEST(Solver, PackingChainAboveExactCap) {
  Graph g = cycle_of_cliques(3, 6, 2);
  SolverConfig cfg = psp_kt();
  PSPChain chain = solver_psp(g, cfg);
  EXPECT_EQ(chain.source, PSPSource::Packing);
  EXPECT_EQ(min_kcut(g, 3, cfg).value, 6);
}

TEST(Verify, DetectsTampering) {
  Graph g = ex1();
  Solution s = min_kcut(g, 3, psp_kt());
  ASSERT_TRUE(verify_solution(g, s, 3).ok);

  Solution dropped = s;
  dropped.edges.pop_back();
  VerifyReport r = verify_solution(g, dropped, 3);
  EXPECT_FALSE(r.ok);

  Solution duplicated = s;
  duplicated.edges.push_back(s.edges.front());
  duplicated.value += 1;
  EXPECT_FALSE(verify_solution(g, duplicated, 3).ok);

  Solution outside = s;
  outside.edges.back() = 99;
  EXPECT_FALSE(verify_solution(g, outside, 3).ok);

  Solution wrong_value = s;
  wrong_value.value -= 1;
  r = verify_solution(g, wrong_value, 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.messages, (std::vector<std::string>{"value mismatch"}));

  EXPECT_FALSE(verify_solution(g, s, 4).ok);

  Solution bad_audit = s;
  bad_audit.audit.R += 1;
  EXPECT_FALSE(verify_solution(g, bad_audit, 3).ok);
}
