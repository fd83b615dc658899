#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kcut/dimacs.hpp"
#include "kcut/generate.hpp"
#include "kcut/json_io.hpp"
#include "kcut/oracle.hpp"
#include "kcut/solver.hpp"

namespace py = pybind11;
using namespace kcut;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw PreconditionError("edge endpoint out of range 1..n");
    list.push_back({std::min(u, v) - 1, std::max(u, v) - 1});
  }
  return Graph(n, list);
}

std::vector<std::pair<int, int>> graph_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u + 1, e.v + 1);
  return out;
}

}  // namespace

PYBIND11_MODULE(_kcut, m) {
  m.doc() = "Deterministic exact minimum k-cut. Vertex ids are 1-based throughout.";

  auto base = py::register_exception<Error>(m, "KcutError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def_property_readonly("edges", &graph_edges)
      .def("to_dimacs", [](const Graph& g) { return emit_dimacs(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("load_dimacs", &load_dimacs_string, py::arg("text"));
  m.def("load_dimacs_file", &load_dimacs_file, py::arg("path"));
  m.def("generate", [](const std::string& spec) { return generate(InstanceSpec::parse(spec)); }, py::arg("spec"));

  m.def(
      "min_kcut",
      [](const Graph& g, int k, const std::string& mode, const std::string& trim, int threads) {
        SolverConfig cfg;
        cfg.mode = parse_solve_mode(mode);
        cfg.trim = parse_trim_mode(trim);
        cfg.threads = threads;
        Solution sol;
        {
          py::gil_scoped_release release;
          sol = min_kcut(g, k, cfg);
        }
        return to_py(solution_json(g, sol));
      },
      py::arg("g"), py::arg("k"), py::arg("mode") = "auto", py::arg("trim") = "safe", py::arg("threads") = 1);

  m.def(
      "psp",
      [](const Graph& g, const std::string& policy, std::optional<std::string> epsilon,
         std::optional<std::int64_t> trees, bool force_epsilon) {
        PSPPolicy p;
        p.kind = policy == "exact" ? PSPPolicy::Exact : PSPPolicy::Packing;
        if (policy != "exact" && policy != "packing") throw PreconditionError("policy must be exact or packing");
        if (epsilon) p.epsilon = Rational::parse(*epsilon);
        p.trees = trees;
        p.force_epsilon = force_epsilon;
        return to_py(chain_json(g, loadsweep_psp(g, p)));
      },
      py::arg("g"), py::arg("policy") = "exact", py::arg("epsilon") = py::none(), py::arg("trees") = py::none(),
      py::arg("force_epsilon") = false);

  m.def(
      "partition_value",
      [](const Graph& g) {
        PartitionValue pv = partition_value(g);
        return py::make_tuple(pv.value.str(), to_py(partition_json(pv.partition)));
      },
      py::arg("g"));

  m.def(
      "ideal_loads", [](const Graph& g) { return to_py(loads_json(g, ideal_loads(g))); }, py::arg("g"));

  m.def(
      "kernel",
      [](const Graph& g, Capacity theta, const std::string& trim) {
        KernelOptions opt;
        opt.mode = parse_trim_mode(trim);
        return to_py(kernel_json(kt_decompose(g, theta, opt)));
      },
      py::arg("g"), py::arg("theta"), py::arg("trim") = "safe");

  m.def(
      "islands",
      [](const Graph& g, const std::vector<int>& labels, int r) {
        return to_py(islands_json(solve_islands(Partition::from_labels(labels), g, r)));
      },
      py::arg("g"), py::arg("labels"), py::arg("r"));

  m.def(
      "brute_min_kcut", [](const Graph& g, int k) { return to_py(oracle_json(g, brute_min_kcut(g, k))); },
      py::arg("g"), py::arg("k"));

  m.def(
      "normal_form", [](const Graph& g, int k) { return to_py(normal_form_json(brute_normal_form_exists(g, k))); },
      py::arg("g"), py::arg("k"));

  m.def(
      "verify",
      [](const Graph& g, const std::vector<std::pair<int, int>>& edges, Capacity value, int k) {
        Solution sol;
        sol.value = value;
        for (auto [u, v] : edges) {
          auto id = g.find_edge(u - 1, v - 1);
          if (!id) throw PreconditionError("edge is not in the graph");
          sol.edges.push_back(*id);
        }
        std::sort(sol.edges.begin(), sol.edges.end());
        VerifyReport rep = verify_solution(g, sol, k);
        return py::make_tuple(rep.ok, rep.messages);
      },
      py::arg("g"), py::arg("edges"), py::arg("value"), py::arg("k"));
}
