#include "kcut/json_io.hpp"

#include <cstdio>

namespace kcut {

Json vertex_set_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

Json partition_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) out.push_back(vertex_set_json(b));
  return out;
}

Json edge_list_json(const Graph& g, const std::vector<EdgeId>& edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back({g.edge(e).u + 1, g.edge(e).v + 1});
  return out;
}

Json graph_json(const Graph& g) {
  std::vector<EdgeId> all(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) all[e] = e;
  Json out;
  out["n"] = g.num_vertices();
  out["m"] = g.num_edges();
  out["edges"] = edge_list_json(g, all);
  return out;
}

Json loads_json(const Graph& g, const LoadVector& loads) {
  Json out;
  out["provenance"] = loads.provenance == LoadProvenance::Ideal ? "ideal" : "concrete";
  if (loads.provenance == LoadProvenance::Concrete) out["t"] = loads.t;
  Json list = Json::array();
  for (EdgeId e = 0; e < static_cast<EdgeId>(loads.load.size()); ++e)
    list.push_back({{"edge", {g.edge(e).u + 1, g.edge(e).v + 1}}, {"load", loads.load[e].str()}});
  out["loads"] = std::move(list);
  return out;
}

Json chain_json(const Graph& g, const PSPChain& chain) {
  Json out;
  out["source"] = chain.source == PSPSource::ExactLoads ? "exact" : "packing";
  out["depth"] = chain.depth();
  Json levels = Json::array();
  for (const auto& level : chain.levels) {
    Json l;
    l["index"] = level.index;
    l["lambda"] = level.lambda.str();
    l["edges"] = edge_list_json(g, level.edges);
    l["kappa_before"] = level.kappa_before;
    l["kappa_after"] = level.kappa_after;
    l["identity_ok"] = level.identity_ok;
    levels.push_back(std::move(l));
  }
  out["levels"] = std::move(levels);
  Json parts = Json::array();
  for (const auto& p : chain.partitions) parts.push_back(partition_json(p));
  out["partitions"] = std::move(parts);
  if (chain.source == PSPSource::Packing) {
    out["epsilon"] = chain.epsilon.str();
    out["trees"] = chain.trees;
    out["graph_min_cut"] = chain.graph_min_cut;
  }
  out["canonical"] = chain.canonical;
  out["loads_consistent"] = chain.loads_consistent;
  return out;
}

Json selection_json(const LevelSelection& sel, Capacity theta_kernel) {
  Json out;
  out["j"] = sel.j;
  out["R"] = sel.R;
  out["theta_j"] = sel.theta ? Json(*sel.theta) : Json(nullptr);
  out["lambda_j"] = sel.lambda.str();
  out["theta_kernel"] = theta_kernel;
  return out;
}

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Split:
      return "split";
    case NodeKind::Trimmed:
      return "trimmed";
    case NodeKind::Core:
      return "core";
    case NodeKind::TrimmedLeaf:
      return "trimmed-leaf";
  }
  return "core";
}

}  // namespace

Json kernel_json(const Kernel& k) {
  Json out;
  out["part"] = k.part_id;
  out["theta"] = k.theta;
  out["mode"] = to_string(k.mode);
  out["vertices"] = vertex_set_json(k.part);
  Json supernodes = Json::array();
  for (int x = 0; x < k.graph.num_nodes(); ++x) supernodes.push_back(vertex_set_json(k.graph.origin(x)));
  out["supernodes"] = std::move(supernodes);
  Json edges = Json::array();
  for (const auto& e : k.graph.edges()) edges.push_back({e.a, e.b, e.cap});
  out["kernel_edges"] = std::move(edges);
  Json nodes = Json::array();
  for (const auto& node : k.nodes) {
    Json j;
    j["id"] = node.id;
    j["parent"] = node.parent;
    j["depth"] = node.depth;
    j["kind"] = kind_name(node.kind);
    j["vertices"] = vertex_set_json(node.vertices);
    if (node.split >= 0) j["split"] = node.split;
    nodes.push_back(std::move(j));
  }
  out["forest"] = std::move(nodes);
  Json splits = Json::array();
  for (const auto& s : k.splits)
    splits.push_back({{"id", s.id},
                      {"node", s.node},
                      {"depth", s.depth},
                      {"value", s.value},
                      {"side_a", vertex_set_json(s.vertices_a)},
                      {"side_b", vertex_set_json(s.vertices_b)}});
  out["splits"] = std::move(splits);
  out["absorbed"] = k.absorbed;
  out["size"] = k.graph.num_nodes();
  return out;
}

Json borders_json(const Graph& g, const std::vector<Border>& borders) {
  Json out = Json::array();
  for (const auto& b : borders) {
    Json j;
    j["part"] = b.part;
    j["split"] = b.split;
    j["view"] = b.view;
    j["depth"] = b.depth;
    j["value"] = b.value;
    j["sideA"] = vertex_set_json(b.side);
    j["sideB"] = vertex_set_json(b.other);
    j["edges"] = edge_list_json(g, b.edges);
    out.push_back(std::move(j));
  }
  return out;
}

Json islands_json(const IslandSolution& s) {
  Json out;
  out["S"] = vertex_set_json(s.S);
  out["cost"] = s.cost;
  Json parts = Json::array();
  for (std::size_t i = 0; i < s.per_part.size(); ++i)
    parts.push_back({{"part", s.per_part[i].first},
                     {"vertices", vertex_set_json(s.per_part[i].second)},
                     {"cost", s.per_part_cost[i]}});
  out["per_part"] = std::move(parts);
  return out;
}

Json solution_json(const Graph& g, const Solution& sol) {
  Json out;
  out["value"] = sol.value;
  out["edges"] = edge_list_json(g, sol.edges);
  out["components"] = partition_json(sol.components);
  const Audit& a = sol.audit;
  Json audit;
  audit["branch"] = a.branch;
  audit["j"] = a.j;
  audit["R"] = a.R;
  audit["theta_j"] = a.theta_j ? Json(*a.theta_j) : Json(nullptr);
  audit["lambda_j"] = a.lambda_j.str();
  audit["theta_kernel"] = a.theta_kernel;
  audit["lambda_tilde"] = a.lambda_tilde;
  audit["prefix"] = edge_list_json(g, a.prefix);
  Json borders = Json::array();
  for (const auto& b : a.borders)
    borders.push_back({{"part", b.part},
                       {"side", vertex_set_json(b.side)},
                       {"other", vertex_set_json(b.other)},
                       {"value", b.value}});
  audit["borders"] = std::move(borders);
  audit["islands"] = vertex_set_json(a.islands);
  audit["r"] = a.r;
  audit["psp_levels"] = a.psp_levels;
  audit["psp_canonical"] = a.psp_canonical;
  out["audit"] = std::move(audit);
  const SearchStats& s = sol.stats;
  Json stats;
  stats["nodes"] = s.nodes;
  stats["leaves"] = s.leaves;
  stats["island_calls"] = s.island_calls;
  stats["max_fanout"] = s.max_fanout;
  stats["kernel_total"] = s.kernel_total;
  stats["kernel_sizes"] = s.kernel_sizes;
  stats["leaf_bound_ok"] = s.leaf_bound_ok;
  stats["invariant_checks"] = s.invariant_checks;
  out["stats"] = std::move(stats);
  return out;
}

Json oracle_json(const Graph& g, const OracleResult& r) {
  Json out;
  out["query"] = r.query;
  out["method"] = r.method;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.instance_hash));
  out["instance_hash"] = hash;
  out["exists"] = r.exists;
  if (r.exists) {
    out["value"] = r.value.den() == 1 ? Json(r.value.num()) : Json(r.value.str());
    if (r.partition) out["partition"] = partition_json(*r.partition);
    if (!r.set.empty()) out["set"] = vertex_set_json(r.set);
    if (!r.edges.empty()) out["edges"] = edge_list_json(g, r.edges);
  }
  return out;
}

Json normal_form_json(const NormalFormResult& r) {
  Json out;
  out["exists"] = r.exists;
  out["r"] = r.exists ? Json(r.r) : Json(nullptr);
  out["exact_theta_witness"] = r.exact_theta_witness;
  out["optimal_partitions"] = r.optimal_partitions;
  out["refining_optimal_partitions"] = r.refining_optimal_partitions;
  return out;
}

}  // namespace kcut
