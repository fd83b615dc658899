#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kcut/bench.hpp"
#include "kcut/dimacs.hpp"
#include "kcut/generate.hpp"
#include "kcut/json_io.hpp"
#include "kcut/mincut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/solver.hpp"

using namespace kcut;

namespace {

struct Common {
  std::string emit = "summary";
  int threads = 1;
  std::optional<std::uint64_t> seed;
};

struct Input {
  std::string file;
  std::string instance;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* f = cmd->add_option("--input,-i", in.file, "DIMACS graph file");
  auto* s = cmd->add_option("--instance", in.instance, "generated instance, e.g. bridged-cliques:4,4,1");
  f->excludes(s);
}

Graph read_graph(const Input& in, const Common& common) {
  if (!in.file.empty()) return load_dimacs_file(in.file);
  if (!in.instance.empty()) {
    InstanceSpec spec = InstanceSpec::parse(in.instance);
    if (common.seed && spec.family == InstanceSpec::Gnp) spec.seed = *common.seed;
    return generate(spec);
  }
  throw PreconditionError("give --input FILE or --instance SPEC");
}

void print(const Common& common, const Json& j, const std::string& summary) {
  if (common.emit == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << summary;
}

std::string join_set(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i] + 1;
  out << '}';
  return out.str();
}

Partition parse_labels(const std::string& text, int n) {
  std::vector<int> labels;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      labels.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw PreconditionError("malformed label '" + item + "'");
    }
  }
  if (static_cast<int>(labels.size()) != n)
    throw PreconditionError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  return Partition::from_labels(labels);
}

SolverConfig make_config(const std::string& mode, const std::string& trim, int threads) {
  SolverConfig cfg;
  cfg.mode = parse_solve_mode(mode);
  cfg.trim = parse_trim_mode(trim);
  cfg.threads = threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kcut: deterministic exact minimum k-cut"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--emit", common.emit, "output format")->check(CLI::IsMember({"json", "summary"}));
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "seed for generated gnp instances");

  // solve
  Input solve_in;
  int solve_k = 2;
  std::string solve_mode = "auto", solve_trim = "safe";
  int exact_cap = 12;
  std::optional<std::int64_t> solve_trees;
  std::string solve_eps;
  std::string solve_borders = "complete";
  auto* solve = app.add_subcommand("solve", "minimum k-cut");
  add_input(solve, solve_in);
  solve->add_option("--k,-k", solve_k, "number of components")->required();
  solve->add_option("--mode", solve_mode)->check(CLI::IsMember({"auto", "psp-kt", "oracle"}));
  solve->add_option("--trim", solve_trim)->check(CLI::IsMember({"safe", "compact"}));
  solve->add_option("--borders", solve_borders, "candidate border family")
      ->check(CLI::IsMember({"complete", "forest"}));
  solve->add_option("--exact-cap", exact_cap, "largest graph for exact loads");
  solve->add_option("--packing-trees", solve_trees, "tree count for the packing chain");
  solve->add_option("--packing-epsilon", solve_eps, "epsilon for the packing chain, as num/den");

  // psp
  Input psp_in;
  std::string psp_policy = "exact", psp_eps;
  std::optional<std::int64_t> psp_trees;
  bool psp_force = false, psp_loads = false;
  std::optional<int> psp_k;
  auto* psp = app.add_subcommand("psp", "principal sequence of partitions");
  add_input(psp, psp_in);
  psp->add_option("--policy", psp_policy)->check(CLI::IsMember({"exact", "packing"}));
  psp->add_option("--epsilon", psp_eps, "packing epsilon as num/den");
  psp->add_option("--trees", psp_trees, "packing tree count");
  psp->add_flag("--force-epsilon", psp_force, "accept epsilon above lambda/(4m^2)");
  psp->add_flag("--loads", psp_loads, "also print the load vector");
  psp->add_option("--k,-k", psp_k, "also report the level selection for k");

  // kernel
  Input kernel_in;
  std::optional<Capacity> kernel_theta;
  std::optional<int> kernel_k;
  std::string kernel_trim = "safe";
  auto* kernel = app.add_subcommand("kernel", "threshold kernels");
  add_input(kernel, kernel_in);
  kernel->add_option("--theta", kernel_theta, "kernelize the whole graph at this threshold");
  kernel->add_option("--k,-k", kernel_k, "kernelize the parts of the solver's start partition for k");
  kernel->add_option("--trim,--mode", kernel_trim)->check(CLI::IsMember({"safe", "compact"}));

  // borders
  Input borders_in;
  int borders_k = 2;
  std::string borders_trim = "safe";
  bool borders_peel = false;
  std::string borders_family = "complete";
  auto* borders = app.add_subcommand("borders", "candidate borders at the search root");
  add_input(borders, borders_in);
  borders->add_option("--k,-k", borders_k)->required();
  borders->add_option("--trim", borders_trim)->check(CLI::IsMember({"safe", "compact"}));
  borders->add_option("--family", borders_family)->check(CLI::IsMember({"complete", "forest"}));
  borders->add_flag("--peel", borders_peel, "keep an edge-disjoint pendant subset");

  // islands
  Input islands_in;
  int islands_r = 1;
  std::string islands_labels;
  std::optional<int> islands_k;
  auto* islands = app.add_subcommand("islands", "cheapest r vertex isolations");
  add_input(islands, islands_in);
  islands->add_option("--r", islands_r)->required();
  islands->add_option("--labels", islands_labels, "part label per vertex, comma separated");
  islands->add_option("--k,-k", islands_k, "use the solver's start partition for k");

  // oracle
  Input oracle_in;
  std::string oracle_query = "min-kcut", oracle_labels;
  int oracle_k = 2, oracle_r = 1, oracle_cap = 12;
  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  add_input(oracle, oracle_in);
  oracle->add_option("--query", oracle_query)
      ->check(CLI::IsMember({"min-kcut", "nontrivial-cut", "partition-value", "islands", "normal-form"}));
  oracle->add_option("--k,-k", oracle_k);
  oracle->add_option("--r", oracle_r);
  oracle->add_option("--labels", oracle_labels, "part label per vertex for islands");
  oracle->add_option("--cap", oracle_cap, "vertex cap for min-kcut");

  // gen
  std::string gen_spec, gen_out;
  auto* gen = app.add_subcommand("gen", "generate an instance as DIMACS");
  gen->add_option("spec", gen_spec, "instance spec")->required();
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  // bench
  std::string bench_suite, bench_csv, bench_json_path;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", bench_suite, "suite JSON file")->required();
  bench->add_option("--csv", bench_csv, "write CSV here");
  bench->add_option("--json", bench_json_path, "write JSON here");

  // verify
  Input verify_in;
  std::string verify_solution_path;
  int verify_k = 2;
  auto* verify = app.add_subcommand("verify", "check a solution JSON against a graph");
  add_input(verify, verify_in);
  verify->add_option("--solution", verify_solution_path, "solution JSON from solve --emit json")->required();
  verify->add_option("--k,-k", verify_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      Graph g = read_graph(solve_in, common);
      SolverConfig cfg = make_config(solve_mode, solve_trim, common.threads);
      cfg.exact_cap = exact_cap;
      cfg.borders = parse_border_family(solve_borders);
      cfg.packing_trees = solve_trees;
      if (!solve_eps.empty()) cfg.packing_epsilon = Rational::parse(solve_eps);
      Solution sol = min_kcut(g, solve_k, cfg);
      VerifyReport rep = verify_solution(g, sol, solve_k);
      if (!rep.ok) throw InvariantViolation("returned solution fails verification: " + rep.messages.front());
      std::ostringstream s;
      s << "value " << sol.value << "\n";
      s << "branch " << sol.audit.branch << "\n";
      if (sol.audit.branch == "psp-kt") {
        s << "j " << sol.audit.j << " R " << sol.audit.R << " theta_j "
          << (sol.audit.theta_j ? std::to_string(*sol.audit.theta_j) : "inf") << " lambda_j "
          << sol.audit.lambda_j.str() << " r " << sol.audit.r << "\n";
        s << "borders " << sol.audit.borders.size() << " islands " << join_set(sol.audit.islands) << "\n";
        s << "leaves " << sol.stats.leaves << " max_fanout " << sol.stats.max_fanout << " kernel_total "
          << sol.stats.kernel_total << "\n";
      }
      s << "components";
      if (g.num_vertices() <= 40) {
        for (const auto& b : sol.components.blocks()) s << ' ' << join_set(b);
      } else {
        s << " sizes";
        for (const auto& b : sol.components.blocks()) s << ' ' << b.size();
      }
      s << "\n";
      print(common, solution_json(g, sol), s.str());
    } else if (*psp) {
      Graph g = read_graph(psp_in, common);
      PSPPolicy policy;
      policy.kind = psp_policy == "exact" ? PSPPolicy::Exact : PSPPolicy::Packing;
      if (!psp_eps.empty()) policy.epsilon = Rational::parse(psp_eps);
      policy.trees = psp_trees;
      policy.force_epsilon = psp_force;
      PSPChain chain = loadsweep_psp(g, policy);
      Json j = chain_json(g, chain);
      std::ostringstream s;
      for (const auto& l : chain.levels)
        s << "level " << l.index << " lambda " << l.lambda.str() << " edges " << l.edges.size() << " kappa "
          << l.kappa_before << "->" << l.kappa_after << (l.identity_ok ? "" : " identity-failed") << "\n";
      if (psp_loads) {
        LoadVector loads = policy.kind == PSPPolicy::Exact
                               ? ideal_loads(g, {policy.exact_cap})
                               : concrete_loads(greedy_tree_packing(g, chain.trees));
        j["loads"] = loads_json(g, loads);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
          s << "load " << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1 << ' ' << loads.load[e].str() << "\n";
      }
      if (psp_k) {
        LevelSelection sel = select_level(chain, *psp_k, g);
        j["selection"] = selection_json(sel, kernel_threshold(sel));
        s << "select j " << sel.j << " R " << sel.R << " theta_j "
          << (sel.theta ? std::to_string(*sel.theta) : "inf") << "\n";
      }
      print(common, j, s.str());
    } else if (*kernel) {
      Graph g = read_graph(kernel_in, common);
      KernelOptions opt;
      opt.mode = parse_trim_mode(kernel_trim);
      std::vector<Kernel> kernels;
      if (kernel_theta) {
        kernels.push_back(kt_decompose(g, *kernel_theta, opt));
      } else if (kernel_k) {
        SolverConfig cfg;
        PSPChain chain = solver_psp(g, cfg);
        LevelSelection sel = select_level(chain, *kernel_k, g);
        Capacity theta = std::max(kernel_threshold(sel), global_min_cut(MultiGraph::from_graph(g)).value);
        const Partition& start = chain.partition(sel.j - 1);
        for (int i = 0; i < start.size(); ++i) kernels.push_back(kt_decompose(g, start.block(i), theta, opt, i));
      } else {
        throw PreconditionError("give --theta or --k");
      }
      Json j = Json::array();
      std::ostringstream s;
      for (const auto& k : kernels) {
        j.push_back(kernel_json(k));
        s << "part " << k.part_id << " size " << k.part.size() << " theta " << k.theta << " supernodes "
          << k.graph.num_nodes() << " splits " << k.splits.size() << " absorbed " << k.absorbed << "\n";
      }
      print(common, j, s.str());
    } else if (*borders) {
      Graph g = read_graph(borders_in, common);
      SolverConfig cfg;
      PSPChain chain = solver_psp(g, cfg);
      LevelSelection sel = select_level(chain, borders_k, g);
      Capacity theta = std::max(kernel_threshold(sel), global_min_cut(MultiGraph::from_graph(g)).value);
      KernelOptions opt;
      opt.mode = parse_trim_mode(borders_trim);
      SearchState root = root_state(g, chain.partition(sel.j - 1), sel.R, theta, opt);
      std::vector<KernelView> views;
      for (const auto& p : root.parts) views.push_back(p.view);
      Capacity limit = sel.theta ? std::min(*sel.theta, theta) : theta;
      std::vector<Border> list = build_candidate_borders(views, limit, parse_border_family(borders_family));
      if (borders_peel) list = pendant_peel_independent(list);
      std::ostringstream s;
      for (const auto& b : list)
        s << "part " << b.part << " split " << b.split << " value " << b.value << ' ' << join_set(b.side) << " | "
          << join_set(b.other) << "\n";
      print(common, borders_json(g, list), s.str());
    } else if (*islands) {
      Graph g = read_graph(islands_in, common);
      Partition pi;
      if (!islands_labels.empty()) {
        pi = parse_labels(islands_labels, g.num_vertices());
      } else if (islands_k) {
        SolverConfig cfg;
        PSPChain chain = solver_psp(g, cfg);
        pi = chain.partition(select_level(chain, *islands_k, g).j - 1);
      } else {
        pi = Partition::whole(g.num_vertices());
      }
      IslandSolution sol = solve_islands(pi, g, islands_r);
      print(common, islands_json(sol), "cost " + std::to_string(sol.cost) + " S " + join_set(sol.S) + "\n");
    } else if (*oracle) {
      Graph g = read_graph(oracle_in, common);
      Json j;
      std::string summary;
      if (oracle_query == "normal-form") {
        NormalFormResult r = brute_normal_form_exists(g, oracle_k);
        j = normal_form_json(r);
        summary = std::string("normal form ") + (r.exists ? "exists r " + std::to_string(r.r) : "missing") + "\n";
      } else {
        OracleResult r;
        if (oracle_query == "min-kcut") {
          r = brute_min_kcut(g, oracle_k, oracle_cap);
        } else if (oracle_query == "nontrivial-cut") {
          r = brute_nontrivial_min_cut(g);
        } else if (oracle_query == "partition-value") {
          r = brute_partition_value(g);
        } else {
          Partition pi = oracle_labels.empty() ? Partition::whole(g.num_vertices())
                                               : parse_labels(oracle_labels, g.num_vertices());
          r = brute_islands(g, pi, oracle_r);
        }
        j = oracle_json(g, r);
        std::string shown = r.value.den() == 1 ? std::to_string(r.value.num()) : r.value.str();
        summary = r.query + ": " + (r.exists ? shown : "none") + " (" + r.method + ")\n";
      }
      print(common, j, summary);
    } else if (*gen) {
      InstanceSpec spec = InstanceSpec::parse(gen_spec);
      if (common.seed && spec.family == InstanceSpec::Gnp) spec.seed = *common.seed;
      std::string text = emit_dimacs(generate(spec), spec.str());
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out);
        if (!out) throw PreconditionError("cannot write " + gen_out);
        out << text;
      }
    } else if (*bench) {
      std::ifstream in(bench_suite);
      if (!in) throw PreconditionError("cannot read " + bench_suite);
      Json suite;
      try {
        suite = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseErrorKind::MalformedLine, 0, std::string("suite JSON: ") + e.what());
      }
      std::vector<BenchRecord> records = run_bench(parse_suite(suite), SolverConfig{}, common.threads);
      std::ostringstream csv;
      csv << bench_csv_header() << "\n";
      for (const auto& r : records) csv << bench_csv_row(r) << "\n";
      if (!bench_csv.empty()) std::ofstream(bench_csv) << csv.str();
      if (!bench_json_path.empty()) std::ofstream(bench_json_path) << bench_json(records).dump(2) << "\n";
      print(common, bench_json(records), csv.str());
      for (const auto& r : records)
        if (!r.ok) return 4;
    } else if (*verify) {
      Graph g = read_graph(verify_in, common);
      std::ifstream in(verify_solution_path);
      if (!in) throw PreconditionError("cannot read " + verify_solution_path);
      Json sj;
      try {
        sj = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseErrorKind::MalformedLine, 0, std::string("solution JSON: ") + e.what());
      }
      Solution sol;
      sol.value = sj.at("value").get<Capacity>();
      for (const auto& e : sj.at("edges")) {
        auto id = g.find_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
        if (!id) throw PreconditionError("solution names an edge that is not in the graph");
        sol.edges.push_back(*id);
      }
      std::sort(sol.edges.begin(), sol.edges.end());
      VerifyReport rep = verify_solution(g, sol, verify_k);
      Json j;
      j["ok"] = rep.ok;
      j["messages"] = rep.messages;
      std::string summary = rep.ok ? "ok\n" : "";
      for (const auto& m : rep.messages) summary += m + "\n";
      print(common, j, summary);
      return rep.ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
