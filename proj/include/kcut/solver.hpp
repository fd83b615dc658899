#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/kernel.hpp"
#include "kcut/psp.hpp"
#include "kcut/rational.hpp"
#include "kcut/refinement.hpp"

namespace kcut {

enum class SolveMode { Auto, PspKt, Oracle };

const char* to_string(SolveMode mode);
SolveMode parse_solve_mode(const std::string& text);

struct Solution;

// Exact routine for the small-lambda branch. Returns nothing when the
// instance is beyond what it can handle.
using SmallLambdaPlugin = std::function<std::optional<Solution>(const Graph&, int)>;

struct SolverConfig {
  SolveMode mode = SolveMode::Auto;
  TrimMode trim = TrimMode::Safe;
  BorderFamily borders = BorderFamily::Complete;
  int exact_cap = 12;
  int enum_cap = 20;
  int oracle_cap = 12;
  int meta_t = 1;  // small-lambda branch when lambda^(t+1) <= n
  // Graphs above exact_cap get a packing-based chain.
  std::optional<std::int64_t> packing_trees;
  std::optional<Rational> packing_epsilon;
  std::int64_t default_packing_trees = 1024;
  Rational default_packing_epsilon = Rational(1, 4);
  int threads = 1;
  bool check_invariants = true;
  SmallLambdaPlugin small_lambda;  // defaults to the brute-force oracle
};

struct BorderUse {
  int part = 0;
  VertexSet side;
  VertexSet other;
  Capacity value = 0;
};

struct Audit {
  std::string branch;  // psp-kt, small-lambda or oracle
  int j = 0;
  int R = 0;
  std::optional<Capacity> theta_j;
  Rational lambda_j;
  Capacity theta_kernel = 0;
  Capacity lambda_tilde = 0;
  std::vector<EdgeId> prefix;  // crossing edges of P_{j-1}
  std::vector<BorderUse> borders;
  VertexSet islands;
  int r = 0;
  int psp_levels = 0;
  bool psp_canonical = true;
};

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
  std::int64_t island_calls = 0;
  int max_fanout = 0;
  int kernel_total = 0;
  std::vector<int> kernel_sizes;
  bool leaf_bound_ok = true;
  std::int64_t invariant_checks = 0;
};

struct Solution {
  std::vector<EdgeId> edges;  // F, increasing ids
  Capacity value = 0;
  Partition components;
  Audit audit;
  SearchStats stats;
};

Solution min_kcut(const Graph& g, int k, const SolverConfig& cfg = {});

struct SearchPart {
  VertexSet vertices;
  KernelView view;
};

struct SearchState {
  std::vector<SearchPart> parts;  // the current partition
  int remaining = 0;              // R'
  Capacity accumulated = 0;
  std::vector<BorderUse> borders;
  int depth = 0;
};

struct SearchContext {
  const Graph* g = nullptr;
  int k = 0;
  int R = 0;
  std::optional<Capacity> prune_theta;  // theta_j
  Capacity theta_kernel = 0;
  BorderFamily borders = BorderFamily::Complete;
  bool check_invariants = true;
  SearchStats stats;
};

struct BestSolution {
  bool found = false;
  Capacity value = 0;
  std::vector<EdgeId> edges;
  std::vector<BorderUse> borders;
  VertexSet islands;
  std::vector<VertexSet> parts;
};

// Explores the island branch first, then every candidate border in order.
void dfs_search(const SearchState& state, SearchContext& ctx, BestSolution& best);

SearchState root_state(const Graph& g, const Partition& start, int R, Capacity theta, const KernelOptions& opt);

struct ThresholdChoice {
  enum Branch { SmallLambda, LargeLambda } branch = LargeLambda;
  Capacity lambda_tilde = 0;
  Capacity theta = 0;
};

ThresholdChoice meta_threshold_select(const Graph& g, const PSPChain& chain, int k, const SolverConfig& cfg);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> messages;
};

VerifyReport verify_solution(const Graph& g, const Solution& sol, int k);

// Chain used by the solver: exact loads up to exact_cap, packing beyond.
PSPChain solver_psp(const Graph& g, const SolverConfig& cfg);

}  // namespace kcut
