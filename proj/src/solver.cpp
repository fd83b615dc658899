#include "kcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "kcut/mincut.hpp"
#include "kcut/oracle.hpp"

namespace kcut {

const char* to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Auto:
      return "auto";
    case SolveMode::PspKt:
      return "psp-kt";
    case SolveMode::Oracle:
      return "oracle";
  }
  return "auto";
}

SolveMode parse_solve_mode(const std::string& text) {
  if (text == "auto") return SolveMode::Auto;
  if (text == "psp-kt") return SolveMode::PspKt;
  if (text == "oracle") return SolveMode::Oracle;
  throw PreconditionError("unknown solve mode '" + text + "'");
}

namespace {

bool better(Capacity value, const std::vector<EdgeId>& edges, const BestSolution& best) {
  if (!best.found) return true;
  if (value != best.value) return value < best.value;
  return edges < best.edges;
}

int active_total(const SearchState& state) {
  int total = 0;
  for (const auto& p : state.parts) total += p.view.num_active();
  return total;
}

Partition state_partition(const SearchState& state, int n) {
  std::vector<VertexSet> blocks;
  blocks.reserve(state.parts.size());
  for (const auto& p : state.parts) blocks.push_back(p.vertices);
  return Partition(n, std::move(blocks));
}

void check_state(const SearchState& state, SearchContext& ctx) {
  if (!ctx.check_invariants) return;
  ++ctx.stats.invariant_checks;
  int kappa = static_cast<int>(state.parts.size());
  KCUT_CHECK(kappa + state.remaining == ctx.k, "budget invariant broken: kappa " + std::to_string(kappa) +
                                                   " + R' " + std::to_string(state.remaining) + " != k");
  int covered = 0;
  for (const auto& p : state.parts) {
    KCUT_CHECK(p.view.vertices() == p.vertices, "view active set differs from its part");
    covered += static_cast<int>(p.vertices.size());
  }
  KCUT_CHECK(covered == ctx.g->num_vertices(), "parts do not cover the graph");
}

SearchState apply_border(const SearchState& state, const Border& b) {
  SearchState child;
  child.parts.reserve(state.parts.size() + 1);
  for (int i = 0; i < static_cast<int>(state.parts.size()); ++i) {
    if (i != b.view) {
      child.parts.push_back(state.parts[i]);
      continue;
    }
    const KernelView& view = state.parts[i].view;
    child.parts.push_back({b.side, restrict_view(view, b.side)});
    child.parts.push_back({b.other, restrict_view(view, b.other)});
  }
  child.remaining = state.remaining - 1;
  child.accumulated = state.accumulated + b.value;
  child.borders = state.borders;
  child.borders.push_back({b.part, b.side, b.other, b.value});
  child.depth = state.depth + 1;
  return child;
}

std::vector<Border> children_of(const SearchState& state, const SearchContext& ctx) {
  if (state.remaining == 0) return {};
  std::vector<KernelView> views;
  views.reserve(state.parts.size());
  for (const auto& p : state.parts) views.push_back(p.view);
  Capacity limit = ctx.prune_theta ? std::min(*ctx.prune_theta, ctx.theta_kernel) : ctx.theta_kernel;
  std::vector<Border> borders = build_candidate_borders(views, limit, ctx.borders);
  borders.erase(std::remove_if(borders.begin(), borders.end(), [&](const Border& b) { return b.value > limit; }),
                borders.end());
  return borders;
}

void island_leaf(const SearchState& state, SearchContext& ctx, BestSolution& best) {
  const Graph& g = *ctx.g;
  int capacity = 0;
  for (const auto& p : state.parts) capacity += static_cast<int>(p.vertices.size()) - 1;
  if (state.remaining > capacity) return;
  ++ctx.stats.leaves;
  Partition pi = state_partition(state, g.num_vertices());
  IslandSolution islands;
  if (state.remaining > 0) {
    ++ctx.stats.island_calls;
    islands = solve_islands(pi, g, state.remaining);
  }
  Capacity total = state.accumulated + islands.cost;
  if (best.found && total > best.value) return;
  std::vector<VertexSet> blocks;
  for (const auto& p : state.parts) {
    VertexSet rest = set_difference(p.vertices, islands.S);
    blocks.push_back(std::move(rest));
  }
  for (Vertex v : islands.S) blocks.push_back({v});
  Partition final_partition(g.num_vertices(), std::move(blocks));
  std::vector<EdgeId> edges = crossing_edges(g, final_partition);
  KCUT_CHECK(static_cast<Capacity>(edges.size()) == total,
             "assembled cut has " + std::to_string(edges.size()) + " edges but the search accounted " +
                 std::to_string(total));
  if (!better(total, edges, best)) return;
  best.found = true;
  best.value = total;
  best.edges = std::move(edges);
  best.borders = state.borders;
  best.islands = islands.S;
  best.parts = final_partition.blocks();
}

void search(const SearchState& state, SearchContext& ctx, BestSolution& best, int parent_total) {
  ++ctx.stats.nodes;
  check_state(state, ctx);
  int total = active_total(state);
  if (ctx.check_invariants && parent_total >= 0)
    KCUT_CHECK(total <= parent_total, "view sizes grew along a search path");
  island_leaf(state, ctx, best);
  if (state.remaining == 0) return;
  if (best.found && state.accumulated > best.value) return;
  std::vector<Border> borders = children_of(state, ctx);
  ctx.stats.max_fanout = std::max(ctx.stats.max_fanout, static_cast<int>(borders.size()));
  for (const Border& b : borders) search(apply_border(state, b), ctx, best, total);
}

void merge_stats(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.leaves += from.leaves;
  into.island_calls += from.island_calls;
  into.max_fanout = std::max(into.max_fanout, from.max_fanout);
  into.invariant_checks += from.invariant_checks;
}

// Root children are explored on worker threads; results are reduced in
// exploration order so the outcome matches the single-threaded run.
void parallel_search(const SearchState& root, SearchContext& ctx, BestSolution& best, int threads) {
  ++ctx.stats.nodes;
  check_state(root, ctx);
  int total = active_total(root);
  island_leaf(root, ctx, best);
  if (root.remaining == 0) return;
  std::vector<Border> borders = children_of(root, ctx);
  ctx.stats.max_fanout = std::max(ctx.stats.max_fanout, static_cast<int>(borders.size()));
  int count = static_cast<int>(borders.size());
  std::vector<BestSolution> results(count);
  std::vector<SearchContext> contexts(count, ctx);
  for (auto& c : contexts) c.stats = SearchStats{};
  std::atomic<int> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        search(apply_border(root, borders[i]), contexts[i], results[i], total);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int workers = std::min(threads, count);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  for (int i = 0; i < count; ++i) {
    merge_stats(ctx.stats, contexts[i].stats);
    if (results[i].found && better(results[i].value, results[i].edges, best)) best = std::move(results[i]);
  }
}

bool leaf_bound_holds(std::int64_t leaves, int fanout, int R) {
  long double bound = std::pow(static_cast<long double>(fanout) + 1.0L, R);
  return static_cast<long double>(leaves) <= bound;
}

Solution oracle_solution(const Graph& g, int k, int cap) {
  OracleResult r = brute_min_kcut(g, k, cap);
  Solution sol;
  sol.edges = r.edges;
  sol.value = static_cast<Capacity>(r.edges.size());
  sol.components = components(g, sol.edges);
  sol.audit.branch = "oracle";
  return sol;
}

void require_input(const Graph& g, int k) {
  int n = g.num_vertices();
  if (k < 2 || k > n)
    throw PreconditionError("k = " + std::to_string(k) + " is out of range 2.." + std::to_string(n));
  if (!is_connected(g)) throw PreconditionError("the input graph is disconnected");
}

Solution psp_kt_solve(const Graph& g, int k, const SolverConfig& cfg, const PSPChain& chain,
                      std::optional<Capacity> lambda_tilde) {
  LevelSelection sel = select_level(chain, k, g, cfg.enum_cap);
  Capacity theta_kernel = kernel_threshold(sel);
  Capacity lt = lambda_tilde ? *lambda_tilde : global_min_cut(MultiGraph::from_graph(g)).value;
  Capacity theta = std::max(theta_kernel, lt);

  const Partition& start = chain.partition(sel.j - 1);
  KernelOptions kopt;
  kopt.mode = cfg.trim;
  kopt.enum_cap = cfg.enum_cap;
  SearchState root = root_state(g, start, sel.R, theta, kopt);

  SearchContext ctx;
  ctx.g = &g;
  ctx.k = k;
  ctx.R = sel.R;
  ctx.prune_theta = sel.theta;
  ctx.theta_kernel = theta;
  ctx.borders = cfg.borders;
  ctx.check_invariants = cfg.check_invariants;
  for (const auto& p : root.parts) ctx.stats.kernel_sizes.push_back(p.view.num_active());
  for (int s : ctx.stats.kernel_sizes) ctx.stats.kernel_total += s;

  BestSolution best;
  if (cfg.threads > 1)
    parallel_search(root, ctx, best, cfg.threads);
  else
    search(root, ctx, best, -1);
  KCUT_CHECK(best.found, "the search produced no solution");

  ctx.stats.leaf_bound_ok = leaf_bound_holds(ctx.stats.leaves, ctx.stats.max_fanout, sel.R);
  if (cfg.check_invariants)
    KCUT_CHECK(ctx.stats.leaf_bound_ok, "leaf count " + std::to_string(ctx.stats.leaves) +
                                            " exceeds (fanout + 1)^R");

  Solution sol;
  sol.edges = best.edges;
  sol.value = best.value;
  sol.components = components(g, sol.edges);
  Audit& a = sol.audit;
  a.branch = "psp-kt";
  a.j = sel.j;
  a.R = sel.R;
  a.theta_j = sel.theta;
  a.lambda_j = sel.lambda;
  a.theta_kernel = theta;
  a.lambda_tilde = lt;
  a.prefix = crossing_edges(g, start);
  a.borders = best.borders;
  a.islands = best.islands;
  a.r = static_cast<int>(best.islands.size());
  a.psp_levels = chain.depth();
  a.psp_canonical = chain.canonical;
  sol.stats = ctx.stats;
  if (cfg.check_invariants) {
    KCUT_CHECK(std::includes(sol.edges.begin(), sol.edges.end(), a.prefix.begin(), a.prefix.end()),
               "the cut does not contain the PSP prefix");
    KCUT_CHECK(static_cast<int>(a.borders.size()) + a.r == a.R, "borders and islands do not use the budget");
  }
  return sol;
}

}  // namespace

void dfs_search(const SearchState& state, SearchContext& ctx, BestSolution& best) { search(state, ctx, best, -1); }

SearchState root_state(const Graph& g, const Partition& start, int R, Capacity theta, const KernelOptions& opt) {
  KCUT_REQUIRE(start.num_vertices() == g.num_vertices(), "start partition does not match the graph");
  SearchState state;
  for (int i = 0; i < start.size(); ++i) {
    auto kernel = std::make_shared<const Kernel>(kt_decompose(g, start.block(i), theta, opt, i));
    state.parts.push_back({start.block(i), KernelView(kernel)});
  }
  state.remaining = R;
  state.accumulated = static_cast<Capacity>(crossing_edges(g, start).size());
  return state;
}

PSPChain solver_psp(const Graph& g, const SolverConfig& cfg) {
  PSPPolicy policy;
  policy.exact_cap = cfg.exact_cap;
  if (g.num_vertices() <= cfg.exact_cap) {
    policy.kind = PSPPolicy::Exact;
  } else {
    policy.kind = PSPPolicy::Packing;
    policy.epsilon = cfg.packing_epsilon.value_or(cfg.default_packing_epsilon);
    policy.trees = cfg.packing_trees.value_or(cfg.default_packing_trees);
    policy.force_epsilon = true;
  }
  return loadsweep_psp(g, policy);
}

ThresholdChoice meta_threshold_select(const Graph& g, const PSPChain& chain, int k, const SolverConfig& cfg) {
  KCUT_REQUIRE(cfg.meta_t >= 1, "meta t must be positive");
  ThresholdChoice out;
  out.lambda_tilde = global_min_cut(MultiGraph::from_graph(g)).value;
  long double power = std::pow(static_cast<long double>(out.lambda_tilde), cfg.meta_t + 1);
  if (cfg.mode != SolveMode::PspKt && power <= static_cast<long double>(g.num_vertices())) {
    out.branch = ThresholdChoice::SmallLambda;
    out.theta = out.lambda_tilde;
    return out;
  }
  out.branch = ThresholdChoice::LargeLambda;
  LevelSelection sel = select_level(chain, k, g, cfg.enum_cap);
  out.theta = std::max(kernel_threshold(sel), out.lambda_tilde);
  return out;
}

Solution min_kcut(const Graph& g, int k, const SolverConfig& cfg) {
  KCUT_REQUIRE(cfg.exact_cap >= 1 && cfg.enum_cap >= 1 && cfg.oracle_cap >= 1, "caps must be positive");
  KCUT_REQUIRE(cfg.threads >= 1, "thread count must be positive");
  require_input(g, k);
  if (cfg.mode == SolveMode::Oracle) {
    if (g.num_vertices() > cfg.oracle_cap)
      throw CapabilityError("oracle mode: " + std::to_string(g.num_vertices()) + " vertices exceeds oracle_cap " +
                            std::to_string(cfg.oracle_cap));
    return oracle_solution(g, k, cfg.oracle_cap);
  }
  PSPChain chain = solver_psp(g, cfg);
  if (cfg.mode == SolveMode::PspKt) return psp_kt_solve(g, k, cfg, chain, std::nullopt);

  ThresholdChoice choice = meta_threshold_select(g, chain, k, cfg);
  if (choice.branch == ThresholdChoice::LargeLambda) return psp_kt_solve(g, k, cfg, chain, choice.lambda_tilde);

  std::optional<Solution> sol;
  if (cfg.small_lambda) {
    sol = cfg.small_lambda(g, k);
  } else if (g.num_vertices() <= cfg.oracle_cap) {
    sol = oracle_solution(g, k, cfg.oracle_cap);
  }
  if (!sol)
    throw CapabilityError("small-lambda branch (global min cut " + std::to_string(choice.lambda_tilde) +
                          ") has no routine for " + std::to_string(g.num_vertices()) +
                          " vertices; use --mode psp-kt");
  sol->audit.branch = "small-lambda";
  sol->audit.lambda_tilde = choice.lambda_tilde;
  sol->audit.psp_levels = chain.depth();
  sol->audit.psp_canonical = chain.canonical;
  return *sol;
}

VerifyReport verify_solution(const Graph& g, const Solution& sol, int k) {
  VerifyReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.messages.push_back(std::move(msg));
  };
  std::vector<EdgeId> edges = sol.edges;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) fail("duplicate edges");
  for (EdgeId e : edges)
    if (e < 0 || e >= g.num_edges()) {
      fail("edge id out of range");
      return report;
    }
  Partition comp = components(g, edges);
  if (comp.size() < k) fail("components < k");
  if (static_cast<Capacity>(edges.size()) != sol.value) fail("value mismatch");
  if (sol.audit.branch == "psp-kt") {
    if (static_cast<int>(sol.audit.borders.size()) + sol.audit.r != sol.audit.R)
      fail("audit shape: borders + islands != R");
    if (!std::includes(edges.begin(), edges.end(), sol.audit.prefix.begin(), sol.audit.prefix.end()))
      fail("audit shape: prefix not contained in F");
    for (const auto& b : sol.audit.borders)
      if (b.side.size() < 2 || b.other.size() < 2) fail("audit shape: trivial border");
    if (static_cast<int>(sol.audit.islands.size()) != sol.audit.r) fail("audit shape: island count");
  }
  return report;
}

}  // namespace kcut
