#include "kcut/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

namespace kcut {

namespace {

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Graph::Graph(int n) : n_(n), adj_(n) { KCUT_REQUIRE(n >= 0, "negative vertex count"); }

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    KCUT_REQUIRE(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, "edge endpoint out of range");
    KCUT_REQUIRE(e.u != e.v, "self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    KCUT_REQUIRE(seen.insert(pair_key(e.u, e.v)).second, "duplicate edge");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    adj_[e.u].push_back({e.v, id});
    adj_[e.v].push_back({e.u, id});
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& inc : a)
    if (inc.to == other) return inc.edge;
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph out;
  out.to_parent = vertices;
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    KCUT_REQUIRE(vertices[i] >= 0 && vertices[i] < g.num_vertices(), "vertex out of range");
    KCUT_REQUIRE(local[vertices[i]] < 0, "vertex listed twice");
    local[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] >= 0 && local[ed.v] >= 0) {
      edges.push_back({local[ed.u], local[ed.v]});
      out.edge_to_parent.push_back(e);
    }
  }
  out.graph = Graph(static_cast<int>(vertices.size()), edges);
  return out;
}

MultiGraph::MultiGraph(std::vector<VertexSet> origin, const std::vector<CapEdge>& edges)
    : origin_(std::move(origin)), adj_(origin_.size()), wdeg_(origin_.size(), 0) {
  int nn = num_nodes();
  for (auto& o : origin_) {
    std::sort(o.begin(), o.end());
    original_count_ += static_cast<int>(o.size());
  }
  std::map<std::pair<int, int>, Capacity> merged;
  for (CapEdge e : edges) {
    KCUT_REQUIRE(e.a >= 0 && e.a < nn && e.b >= 0 && e.b < nn, "supernode out of range");
    KCUT_REQUIRE(e.cap > 0, "capacities must be positive");
    if (e.a == e.b) continue;
    if (e.a > e.b) std::swap(e.a, e.b);
    merged[{e.a, e.b}] += e.cap;
  }
  edges_.reserve(merged.size());
  for (const auto& [ab, cap] : merged) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({ab.first, ab.second, cap});
    adj_[ab.first].push_back({ab.second, id});
    adj_[ab.second].push_back({ab.first, id});
    wdeg_[ab.first] += cap;
    wdeg_[ab.second] += cap;
  }
}

MultiGraph MultiGraph::from_graph(const Graph& g, std::span<const Vertex> labels) {
  KCUT_REQUIRE(labels.empty() || static_cast<int>(labels.size()) == g.num_vertices(), "label count mismatch");
  std::vector<VertexSet> origin(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) origin[v] = {labels.empty() ? v : labels[v]};
  std::vector<CapEdge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, 1});
  return MultiGraph(std::move(origin), edges);
}

Capacity MultiGraph::capacity_between(int x, int y) const {
  const auto& a = adj_[x].size() <= adj_[y].size() ? adj_[x] : adj_[y];
  int other = adj_[x].size() <= adj_[y].size() ? y : x;
  for (const auto& inc : a)
    if (inc.to == other) return edges_[inc.edge].cap;
  return 0;
}

Partition::Partition(int n, std::vector<VertexSet> blocks) : block_of_(n, -1) {
  for (auto& b : blocks) {
    KCUT_REQUIRE(!b.empty(), "empty block in partition");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  blocks_ = std::move(blocks);
  for (int i = 0; i < size(); ++i) {
    for (Vertex v : blocks_[i]) {
      KCUT_REQUIRE(v >= 0 && v < n, "partition vertex out of range");
      KCUT_REQUIRE(block_of_[v] < 0, "partition blocks overlap");
      block_of_[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) KCUT_REQUIRE(block_of_[v] >= 0, "partition does not cover every vertex");
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::map<int, VertexSet> groups;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) groups[labels[v]].push_back(v);
  std::vector<VertexSet> blocks;
  for (auto& [_, b] : groups) blocks.push_back(std::move(b));
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

Partition Partition::whole(int n) {
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return n == 0 ? Partition(0, {}) : Partition(n, {all});
}

Partition Partition::discrete(int n) {
  std::vector<VertexSet> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back({v});
  return Partition(n, std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.num_vertices() != num_vertices()) return false;
  for (const auto& b : blocks_) {
    int c = coarser.block_of(b[0]);
    for (Vertex v : b)
      if (coarser.block_of(v) != c) return false;
  }
  return true;
}

namespace {

std::vector<char> membership(int n, const VertexSet& s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    KCUT_REQUIRE(v >= 0 && v < n, "set is not a subset of the vertex set");
    in[v] = 1;
  }
  return in;
}

}  // namespace

CutSide cut(const Graph& g, const VertexSet& s) {
  auto in = membership(g.num_vertices(), s);
  CutSide out;
  out.side = s;
  std::sort(out.side.begin(), out.side.end());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (in[g.edge(e).u] != in[g.edge(e).v]) out.edges.push_back(e);
  out.value = static_cast<Capacity>(out.edges.size());
  return out;
}

CutSide cut(const MultiGraph& h, const VertexSet& s) {
  auto in = membership(h.num_nodes(), s);
  CutSide out;
  out.side = s;
  std::sort(out.side.begin(), out.side.end());
  for (int e = 0; e < h.num_edges(); ++e) {
    if (in[h.edge(e).a] != in[h.edge(e).b]) {
      out.edges.push_back(e);
      out.value += h.edge(e).cap;
    }
  }
  return out;
}

int internal_edge_count(const Graph& g, const VertexSet& s) {
  auto in = membership(g.num_vertices(), s);
  int count = 0;
  for (Vertex v : s)
    for (const auto& inc : g.neighbors(v))
      if (in[inc.to] && inc.to > v) ++count;
  return count;
}

std::vector<EdgeId> crossing_edges(const Graph& g, const Partition& p) {
  KCUT_REQUIRE(p.num_vertices() == g.num_vertices(), "partition size does not match graph");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (p.block_of(g.edge(e).u) != p.block_of(g.edge(e).v)) out.push_back(e);
  return out;
}

MultiGraph contract(const Graph& g, const Partition& grouping) {
  return contract(MultiGraph::from_graph(g), grouping);
}

MultiGraph contract(const MultiGraph& h, const Partition& grouping) {
  KCUT_REQUIRE(grouping.num_vertices() == h.num_nodes(), "grouping does not cover the multigraph");
  std::vector<VertexSet> origin(grouping.size());
  for (int b = 0; b < grouping.size(); ++b) {
    for (int x : grouping.block(b)) origin[b].insert(origin[b].end(), h.origin(x).begin(), h.origin(x).end());
  }
  std::vector<CapEdge> edges;
  for (const CapEdge& e : h.edges()) {
    int a = grouping.block_of(e.a);
    int b = grouping.block_of(e.b);
    if (a != b) edges.push_back({a, b, e.cap});
  }
  return MultiGraph(std::move(origin), edges);
}

Partition components(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<char> gone(g.num_edges(), 0);
  for (EdgeId e : removed) {
    KCUT_REQUIRE(e >= 0 && e < g.num_edges(), "removed edge not in graph");
    gone[e] = 1;
  }
  UnionFind uf(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!gone[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<int> labels(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

bool is_connected(const Graph& g) { return g.num_vertices() <= 1 || components(g).size() == 1; }

bool is_connected(const MultiGraph& h) {
  if (h.num_nodes() <= 1) return true;
  UnionFind uf(h.num_nodes());
  int merged = 0;
  for (const CapEdge& e : h.edges()) merged += uf.unite(e.a, e.b);
  return merged == h.num_nodes() - 1;
}

VertexSet origin_of(const MultiGraph& h, const VertexSet& supernodes) {
  VertexSet out;
  for (int x : supernodes) out.insert(out.end(), h.origin(x).begin(), h.origin(x).end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet complement(const VertexSet& s, int n) {
  VertexSet out;
  std::size_t i = 0;
  for (int v = 0; v < n; ++v) {
    if (i < s.size() && s[i] == v) {
      ++i;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

VertexSet normalized_side(const VertexSet& s, int n) {
  if (!s.empty() && s[0] == 0) return s;
  return complement(s, n);
}

bool is_sorted_set(const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::VertexOutOfRange: return "vertex id out of range";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::EdgeCountMismatch: return "edge count mismatch";
  }
  return "parse error";
}

}  // namespace kcut
