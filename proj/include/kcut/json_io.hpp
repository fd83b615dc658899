#pragma once

#include <json.hpp>

#include "kcut/graph.hpp"
#include "kcut/kernel.hpp"
#include "kcut/loads.hpp"
#include "kcut/oracle.hpp"
#include "kcut/psp.hpp"
#include "kcut/refinement.hpp"
#include "kcut/solver.hpp"

namespace kcut {

// All vertex ids in JSON are 1-based, matching DIMACS input. Rationals are
// written as "num/den" strings.
using Json = nlohmann::ordered_json;

Json vertex_set_json(const VertexSet& s);
Json partition_json(const Partition& p);
Json edge_list_json(const Graph& g, const std::vector<EdgeId>& edges);
Json graph_json(const Graph& g);
Json loads_json(const Graph& g, const LoadVector& loads);
Json chain_json(const Graph& g, const PSPChain& chain);
Json selection_json(const LevelSelection& sel, Capacity theta_kernel);
Json kernel_json(const Kernel& k);
Json borders_json(const Graph& g, const std::vector<Border>& borders);
Json islands_json(const IslandSolution& s);
Json solution_json(const Graph& g, const Solution& sol);
Json oracle_json(const Graph& g, const OracleResult& r);
Json normal_form_json(const NormalFormResult& r);

}  // namespace kcut
