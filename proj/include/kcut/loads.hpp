#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/rational.hpp"

namespace kcut {

enum class LoadProvenance { Ideal, Concrete };

struct LoadVector {
  std::vector<Rational> load;  // indexed by edge id
  LoadProvenance provenance = LoadProvenance::Ideal;
  std::int64_t t = 0;  // tree count for concrete loads
};

struct PackingState {
  std::int64_t t = 0;
  std::vector<std::int64_t> usage;        // per edge
  std::vector<std::vector<EdgeId>> trees;  // empty unless retained
};

struct PartitionValue {
  Rational value;
  Partition partition;
};

struct ExactLoadOptions {
  int exact_cap = 12;
};

// Phi(G) by enumeration of partitions into connected parts. Among optimal
// partitions the one with fewest parts wins, then the lexicographically
// smallest block sequence.
PartitionValue partition_value(const Graph& g, const ExactLoadOptions& opt = {});

LoadVector ideal_loads(const Graph& g, const ExactLoadOptions& opt = {});

// Tree i is a minimum spanning tree under the usage counts of trees 1..i-1,
// ties broken by edge id.
PackingState greedy_tree_packing(const Graph& g, std::int64_t t, bool keep_trees = false);

LoadVector concrete_loads(const PackingState& p);

// ceil(6 lambda ln m / eps^2), at least 1. eps must lie in (0, 2).
std::int64_t required_tree_count(std::int64_t lambda, std::int64_t m, const Rational& eps);

}  // namespace kcut
