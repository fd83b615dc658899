#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kcut/error.hpp"

namespace kcut {

using Vertex = int;
using EdgeId = int;
using Capacity = std::int64_t;
// Sorted, duplicate-free list of vertex (or supernode) ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

// Simple undirected graph with unit capacities. Edges are stored with u < v
// and keep the order in which they were given; that order is the edge id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;      // local vertex -> parent vertex
  std::vector<EdgeId> edge_to_parent; // local edge -> parent edge
};

// Vertices are renumbered in increasing parent id order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

struct CapEdge {
  int a;
  int b;
  Capacity cap;
};

// Capacitated multigraph whose supernodes stand for sets of original vertices.
// Parallel edges are merged and self-loops dropped on construction.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::vector<VertexSet> origin, const std::vector<CapEdge>& edges);
  // Identity image of g. labels[v] is the original id of v (defaults to v).
  static MultiGraph from_graph(const Graph& g, std::span<const Vertex> labels = {});

  int num_nodes() const { return static_cast<int>(origin_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const CapEdge& edge(int e) const { return edges_[e]; }
  const std::vector<CapEdge>& edges() const { return edges_; }
  std::span<const Incidence> neighbors(int x) const { return adj_[x]; }
  Capacity weighted_degree(int x) const { return wdeg_[x]; }
  const VertexSet& origin(int x) const { return origin_[x]; }
  const std::vector<VertexSet>& origins() const { return origin_; }
  int size(int x) const { return static_cast<int>(origin_[x].size()); }
  int original_count() const { return original_count_; }
  Capacity capacity_between(int x, int y) const;

 private:
  std::vector<VertexSet> origin_;
  std::vector<CapEdge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<Capacity> wdeg_;
  int original_count_ = 0;
};

// Partition of 0..n-1. Stored canonically: blocks sorted internally and
// ordered by their minimum element.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<VertexSet> blocks);
  static Partition from_labels(std::span<const int> labels);
  static Partition whole(int n);
  static Partition discrete(int n);

  int size() const { return static_cast<int>(blocks_.size()); }
  int num_vertices() const { return static_cast<int>(block_of_.size()); }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  const VertexSet& block(int i) const { return blocks_[i]; }
  int block_of(Vertex v) const { return block_of_[v]; }
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<VertexSet> blocks_;
  std::vector<int> block_of_;
};

struct CutSide {
  VertexSet side;
  Capacity value = 0;
  std::vector<EdgeId> edges;
};

CutSide cut(const Graph& g, const VertexSet& s);
CutSide cut(const MultiGraph& h, const VertexSet& s);
int internal_edge_count(const Graph& g, const VertexSet& s);

// Edges of g with endpoints in different blocks, in increasing id order.
std::vector<EdgeId> crossing_edges(const Graph& g, const Partition& p);

MultiGraph contract(const Graph& g, const Partition& grouping);
MultiGraph contract(const MultiGraph& h, const Partition& grouping);

Partition components(const Graph& g, std::span<const EdgeId> removed = {});
bool is_connected(const Graph& g);
bool is_connected(const MultiGraph& h);

// Original vertices behind a set of supernodes, sorted.
VertexSet origin_of(const MultiGraph& h, const VertexSet& supernodes);

// Complement of s inside 0..n-1.
VertexSet complement(const VertexSet& s, int n);
// The side containing vertex 0 of {s, complement}, i.e. the normalized side.
VertexSet normalized_side(const VertexSet& s, int n);

bool is_sorted_set(const VertexSet& s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

}  // namespace kcut
