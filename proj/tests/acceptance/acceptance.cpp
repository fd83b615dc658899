// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "kcut/generate.hpp"
#include "kcut/kernel.hpp"
#include "kcut/loads.hpp"
#include "kcut/mincut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/psp.hpp"
#include "kcut/refinement.hpp"
#include "kcut/solver.hpp"

using namespace kcut;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Instance {
  std::string name;
  Graph g;
};

// 200 connected gnp graphs, n in 6..10, p in {0.3, 0.5, 0.8}.
std::vector<Instance> gnp_suite() {
  const double ps[] = {0.3, 0.5, 0.8};
  std::vector<Instance> out;
  for (int i = 0; i < 200; ++i) {
    int n = 6 + i % 5;
    double p = ps[(i / 5) % 3];
    auto seed = static_cast<std::uint64_t>(1000 + i);
    InstanceSpec spec = InstanceSpec::gnp(n, p, seed);
    out.push_back({spec.str(), generate(spec)});
  }
  return out;
}

std::vector<Instance> named_suite() {
  std::vector<Instance> out;
  for (const char* s : {"bridged-cliques:4,4,1", "bridged-cliques:5,5,2", "bridged-cliques:3,6,2",
                        "cycle-of-cliques:3,4,1", "cycle-of-cliques:3,5,2", "cycle-of-cliques:4,3,1",
                        "gnp:9,0.3,609"})
    out.push_back({s, generate(InstanceSpec::parse(s))});
  return out;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SolverConfig config(SolveMode mode, TrimMode trim = TrimMode::Safe) {
  SolverConfig cfg;
  cfg.mode = mode;
  cfg.trim = trim;
  return cfg;
}

void oracle_equivalence(const std::vector<Instance>& suite) {
  auto start = Clock::now();
  int checks = 0, mismatches = 0, unverified = 0;
  std::string first;
  for (const auto& inst : suite) {
    int n = inst.g.num_vertices();
    for (int k = 2; k <= std::min(6, n); ++k) {
      Capacity want = brute_min_kcut(inst.g, k).value.floor();
      for (SolveMode mode : {SolveMode::PspKt, SolveMode::Auto}) {
        Solution s = min_kcut(inst.g, k, config(mode));
        ++checks;
        if (!verify_solution(inst.g, s, k).ok) ++unverified;
        if (s.value != want) {
          ++mismatches;
          if (first.empty()) first = fmt(" first %s k=%d got %lld want %lld", inst.name.c_str(), k,
                                         static_cast<long long>(s.value), static_cast<long long>(want));
        }
      }
    }
  }
  double secs = seconds_since(start);
  report(1, "oracle equivalence", mismatches == 0 && unverified == 0 && secs < 300,
         fmt("%d instances, %d checks (psp-kt and auto), %d mismatches, %d unverified, %.1fs%s",
             static_cast<int>(suite.size()), checks, mismatches, unverified, secs, first.c_str()));
}

void ex1_golden() {
  Graph g = bridged_cliques(4, 4, 1);
  bool ok = true;
  std::string detail;
  for (int k = 2; k <= 4; ++k) {
    Capacity oracle = brute_min_kcut(g, k).value.floor();
    Solution s = min_kcut(g, k, config(SolveMode::PspKt));
    ok = ok && s.value == oracle && verify_solution(g, s, k).ok;
    if (k >= 3) ok = ok && s.audit.theta_j == Capacity(4);
    if (k <= 3) ok = ok && s.audit.r <= 1;
    detail += fmt("k=%d value %lld oracle %lld r=%d theta_j=%lld; ", k, static_cast<long long>(s.value),
                  static_cast<long long>(oracle), s.audit.r,
                  static_cast<long long>(s.audit.theta_j.value_or(-1)));
  }
  PSPChain chain = loadsweep_psp(g, {});
  bool lambdas = chain.depth() == 2 && chain.level(1).lambda == Rational(1) && chain.level(2).lambda == Rational(2);
  ok = ok && lambdas;
  detail += lambdas ? "lambda chain (1,2)" : "lambda chain differs";
  report(2, "EX1 golden values", ok, detail);
}

bool chain_identity(const PSPChain& chain) {
  for (int i = 1; i <= chain.depth(); ++i) {
    const PSPLevel& lv = chain.level(i);
    Rational lhs(static_cast<std::int64_t>(lv.edges.size()));
    if (lhs != lv.lambda * Rational(lv.kappa_after - lv.kappa_before)) return false;
    if (lv.kappa_before != chain.partition(i - 1).size() || lv.kappa_after != chain.partition(i).size())
      return false;
    if (i > 1 && !(lv.lambda > chain.level(i - 1).lambda)) return false;
  }
  return true;
}

void psp_identity(const std::vector<Instance>& suite) {
  int chains = 0, bad = 0;
  for (const auto& inst : suite) {
    ++chains;
    if (!chain_identity(solver_psp(inst.g, {}))) ++bad;
  }
  for (const char* s : {"cycle-of-cliques:4,8,2", "cycle-of-cliques:6,10,2", "gnp:30,0.2,5"}) {
    Graph g = generate(InstanceSpec::parse(s));
    SolverConfig cfg;
    ++chains;
    if (!chain_identity(solver_psp(g, cfg))) ++bad;
  }
  report(3, "PSP identity", bad == 0, fmt("%d chains (exact and packing), %d violations", chains, bad));
}

void loadsweep_correctness() {
  std::vector<Instance> graphs;
  for (const char* s : {"bridged-cliques:4,4,1", "bridged-cliques:3,4,1", "cycle-of-cliques:3,3,1",
                        "gnp:7,0.5,1", "gnp:8,0.4,2", "gnp:7,0.6,3", "gnp:6,0.8,4", "gnp:9,0.3,5",
                        "bridged-cliques:5,5,2", "gnp:9,0.7,6"})
    graphs.push_back({s, generate(InstanceSpec::parse(s))});
  std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  graphs.push_back({"K4", Graph(4, k4)});
  graphs.push_back({"C6", Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})});
  graphs.push_back({"P5", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})});

  auto start = Clock::now();
  int tested = 0, bucket_mismatch = 0, load_violations = 0;
  std::int64_t trees = 0;
  std::string first;
  for (const auto& inst : graphs) {
    const Graph& g = inst.g;
    std::int64_t m = g.num_edges();
    if (m > 30) continue;
    ++tested;
    Capacity lambda = global_min_cut(MultiGraph::from_graph(g)).value;
    Rational eps = Rational(lambda) / Rational(4 * m * m);
    std::int64_t t = required_tree_count(lambda, m, eps);
    trees += t;
    LoadVector concrete = concrete_loads(greedy_tree_packing(g, t));
    LoadVector ideal = ideal_loads(g);
    Rational tol = eps / Rational(lambda);
    for (EdgeId e = 0; e < m; ++e)
      if ((concrete.load[e] - ideal.load[e]).abs() > tol) ++load_violations;
    PSPChain packed = psp_from_loads(concrete, g, Rational(2) * eps / Rational(lambda));
    PSPChain exact = loadsweep_psp(g, {});
    bool same = packed.partitions == exact.partitions && packed.depth() == exact.depth();
    for (int i = 1; same && i <= exact.depth(); ++i) same = packed.level(i).edges == exact.level(i).edges;
    if (!same) {
      ++bucket_mismatch;
      if (first.empty()) first = " first mismatch " + inst.name;
    }
  }
  report(4, "LoadSweep correctness", bucket_mismatch == 0 && load_violations == 0,
         fmt("%d graphs with m<=30, %lld trees total, %d bucket mismatches, %d load deviations above eps/lambda, "
             "%.1fs%s",
             tested, static_cast<long long>(trees), bucket_mismatch, load_violations, seconds_since(start),
             first.c_str()));
}

void kernel_preservation(const std::vector<Instance>& suite) {
  int kernels = 0, violations = 0;
  for (TrimMode mode : {TrimMode::Safe, TrimMode::Compact}) {
    KernelOptions opt;
    opt.mode = mode;
    for (const auto& inst : suite) {
      PSPChain chain = solver_psp(inst.g, {});
      for (int k = 2; k <= std::min(6, inst.g.num_vertices()); ++k) {
        LevelSelection sel = select_level(chain, k, inst.g);
        Capacity theta = kernel_threshold(sel);
        const Partition& start = chain.partition(sel.j - 1);
        for (int i = 0; i < start.size(); ++i) {
          if (start.block(i).size() > 16) continue;
          Kernel kern = kt_decompose(inst.g, start.block(i), theta, opt, i);
          ++kernels;
          violations += brute_kernel_preservation_violations(inst.g, kern);
        }
      }
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      Graph g = gnp(12 + static_cast<int>(seed % 5), 0.4, seed);
      for (Capacity theta = 1; theta <= 6; ++theta) {
        ++kernels;
        violations += brute_kernel_preservation_violations(g, kt_decompose(g, theta, opt));
      }
    }
  }
  report(5, "kernel preservation", violations == 0,
         fmt("%d kernels (safe and compact), %d violations", kernels, violations));
}

// Walks nested candidate borders toward an optimal partition q.
struct BorderWalk {
  const Graph* g = nullptr;
  const Partition* q = nullptr;
  Capacity limit = 0;
  BorderFamily family = BorderFamily::Complete;
  std::int64_t steps = 0;

  // A part is done when it holds at most one non-singleton block of q.
  bool terminal(const SearchState& s) const {
    for (const auto& p : s.parts) {
      int big = 0;
      std::vector<int> seen;
      for (Vertex v : p.vertices) {
        int b = q->block_of(v);
        if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
        seen.push_back(b);
        if (q->block(b).size() > 1) ++big;
      }
      if (big > 1) return false;
    }
    return true;
  }

  bool nested(const Border& b) const {
    for (Vertex v : b.side)
      for (Vertex u : q->block(q->block_of(v)))
        if (!std::binary_search(b.side.begin(), b.side.end(), u)) return false;
    return true;
  }

  bool reaches(const SearchState& s) {
    if (++steps > 200000) return false;
    if (terminal(s)) return true;
    if (s.remaining == 0) return false;
    std::vector<KernelView> views;
    for (const auto& p : s.parts) views.push_back(p.view);
    for (const Border& b : build_candidate_borders(views, limit, family)) {
      if (b.value > limit || !nested(b)) continue;
      SearchState child;
      for (int i = 0; i < static_cast<int>(s.parts.size()); ++i) {
        if (i != b.view) {
          child.parts.push_back(s.parts[i]);
          continue;
        }
        child.parts.push_back({b.side, restrict_view(s.parts[i].view, b.side)});
        child.parts.push_back({b.other, restrict_view(s.parts[i].view, b.other)});
      }
      child.remaining = s.remaining - 1;
      if (reaches(child)) return true;
    }
    return false;
  }
};

void border_completeness(const std::vector<Instance>& suite) {
  int cases = 0, no_normal_form = 0, misses = 0, forest_misses = 0;
  std::string first;
  for (std::size_t idx = 0; idx < suite.size(); ++idx) {
    const auto& inst = suite[idx];
    const Graph& g = inst.g;
    if (g.num_vertices() > 10) continue;
    PSPChain chain = loadsweep_psp(g, {});
    for (int k = 2; k <= std::min(5, g.num_vertices()); ++k) {
      LevelSelection sel = select_level(chain, k, g);
      if (sel.R == 0) continue;
      NormalFormResult nf = brute_normal_form_exists(g, k);
      if (!nf.exists) {
        ++no_normal_form;
        continue;
      }
      ++cases;
      const Partition& start = chain.partition(sel.j - 1);
      Capacity theta = std::max(kernel_threshold(sel), global_min_cut(MultiGraph::from_graph(g)).value);
      Capacity limit = sel.theta ? std::min(*sel.theta, theta) : theta;
      SearchState root = root_state(g, start, sel.R, theta, {});
      auto optimal = brute_optimal_kcuts(g, k);
      auto found_with = [&](BorderFamily family) {
        for (const Partition& q : optimal) {
          if (!q.refines(start)) continue;
          BorderWalk walk{&g, &q, limit, family};
          if (walk.reaches(root)) return true;
        }
        return false;
      };
      if (!found_with(BorderFamily::Complete)) {
        ++misses;
        if (first.empty()) first = fmt(" first miss %s k=%d", inst.name.c_str(), k);
      }
      if (!found_with(BorderFamily::Forest)) ++forest_misses;
    }
  }
  report(6, "border completeness", misses == 0,
         fmt("%d (instance, k) cases with a normal form, %d misses; forest-only family would miss %d; "
             "%d cases without a normal form skipped%s",
             cases, misses, forest_misses, no_normal_form, first.c_str()));
}

void commutativity() {
  std::mt19937_64 rng(20261015);
  int triples = 0, bad = 0;
  while (triples < 1000) {
    Graph g = gnp(6 + static_cast<int>(rng() % 7), 0.5, rng() % 100000);
    int n = g.num_vertices();
    VertexSet c, x;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 != 0) c.push_back(v);
    if (c.size() < 3) continue;
    for (Vertex v : c)
      if (rng() % 2) x.push_back(v);
    Vertex v = c[rng() % c.size()];
    ScheduleOutcome a = island_then_border(g, c, v, x);
    ScheduleOutcome b = border_then_island(g, c, v, x);
    ++triples;
    if (a.total != b.total || a.parts != b.parts) ++bad;
  }
  report(7, "commutativity", bad == 0, fmt("%d (part, vertex, border) triples, %d disagreements", triples, bad));
}

void islands_exactness() {
  std::mt19937_64 rng(77);
  int cases = 0, bad = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 8 + i % 11;
    Graph g = gnp(n, 0.3 + 0.1 * (i % 4), static_cast<std::uint64_t>(500 + i));
    std::vector<int> labels(n);
    int parts = 1 + static_cast<int>(rng() % 4);
    for (auto& l : labels) l = static_cast<int>(rng() % parts);
    Partition pi = Partition::from_labels(labels);
    int r = 1 + i % 3;
    if (r > n - pi.size()) r = n - pi.size();
    IslandSolution s = solve_islands(pi, g, r);
    OracleResult o = brute_islands(g, pi, r);
    ++cases;
    if (Rational(s.cost) != o.value || s.S != o.set) ++bad;
  }
  report(8, "islands exactness", bad == 0, fmt("%d instances (n<=18, r<=3), %d mismatches", cases, bad));
}

void invariant_suite(const std::vector<Instance>& suite) {
  int solves = 0, failures_seen = 0;
  std::int64_t checks = 0;
  for (std::size_t i = 0; i < suite.size(); i += 4) {
    const Graph& g = suite[i].g;
    for (int k = 2; k <= std::min(6, g.num_vertices()); ++k) {
      for (TrimMode trim : {TrimMode::Safe, TrimMode::Compact}) {
        SolverConfig cfg = config(SolveMode::PspKt, trim);
        ++solves;
        try {
          Solution s = min_kcut(g, k, cfg);
          checks += s.stats.invariant_checks;
          bool prefix = std::includes(s.edges.begin(), s.edges.end(), s.audit.prefix.begin(), s.audit.prefix.end());
          bool budget = static_cast<int>(s.audit.borders.size()) + s.audit.r == s.audit.R;
          if (!prefix || !budget || !s.stats.leaf_bound_ok) ++failures_seen;
        } catch (const InvariantViolation&) {
          ++failures_seen;
        }
      }
    }
  }
  std::mt19937_64 rng(9);
  int pairs = 0, uncross_bad = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g = gnp(8 + i % 5, 0.45, static_cast<std::uint64_t>(900 + i));
    int n = g.num_vertices();
    std::vector<int> a(n), b(n);
    for (int v = 0; v < n; ++v) {
      a[v] = static_cast<int>(rng() % 4);
      b[v] = static_cast<int>(rng() % 3);
    }
    UncrossResult u = uncross_partitions(Partition::from_labels(a), Partition::from_labels(b), g);
    ++pairs;
    if (!u.holds) ++uncross_bad;
  }
  report(9, "invariant suite", failures_seen == 0 && uncross_bad == 0 && checks > 0,
         fmt("%d solves, %lld state checks, %d failures; %d uncrossing pairs, %d violations", solves,
             static_cast<long long>(checks), failures_seen, pairs, uncross_bad));
}

void performance_smoke() {
  Graph g = cycle_of_cliques(20, 50, 2);
  auto start = Clock::now();
  Solution s = min_kcut(g, 3, config(SolveMode::PspKt, TrimMode::Compact));
  double secs = seconds_since(start);
  int n = g.num_vertices();
  bool ok = secs < 60 && 10 * s.stats.kernel_total <= n && s.stats.leaf_bound_ok && verify_solution(g, s, 3).ok;
  report(10, "performance smoke", ok,
         fmt("n=%d m=%d k=3 value %lld in %.1fs, kernel total %d, leaves %lld <= (%d+1)^%d, psp levels %d", n,
             g.num_edges(), static_cast<long long>(s.value), secs, s.stats.kernel_total,
             static_cast<long long>(s.stats.leaves), s.stats.max_fanout, s.audit.R, s.audit.psp_levels));
}

}  // namespace

int main() {
  std::vector<Instance> gnps = gnp_suite();
  std::vector<Instance> all = gnps;
  for (auto& inst : named_suite()) all.push_back(inst);

  oracle_equivalence(gnps);
  ex1_golden();
  psp_identity(all);
  loadsweep_correctness();
  kernel_preservation(all);
  border_completeness(all);
  commutativity();
  islands_exactness();
  invariant_suite(all);
  performance_smoke();

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
