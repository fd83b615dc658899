#pragma once

#include <optional>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/loads.hpp"
#include "kcut/rational.hpp"

namespace kcut {

struct PSPLevel {
  int index = 0;  // 1-based
  Rational lambda;
  std::vector<EdgeId> edges;  // A_i, increasing ids
  int kappa_before = 0;
  int kappa_after = 0;
  bool identity_ok = false;
};

enum class PSPSource { ExactLoads, Packing };

struct PSPChain {
  PSPSource source = PSPSource::ExactLoads;
  std::vector<Partition> partitions;  // P_0 .. P_t
  std::vector<PSPLevel> levels;       // levels[i-1] is level i
  // packing provenance
  Rational epsilon;
  std::int64_t trees = 0;
  Capacity graph_min_cut = 0;
  bool canonical = true;
  bool loads_consistent = true;

  int depth() const { return static_cast<int>(levels.size()); }
  const Partition& partition(int i) const { return partitions.at(i); }
  const PSPLevel& level(int i) const { return levels.at(i - 1); }
  // A_{<=i}, increasing ids.
  std::vector<EdgeId> prefix(int i) const;
};

struct PSPPolicy {
  enum Kind { Exact, Packing } kind = Exact;
  std::optional<Rational> epsilon;     // packing; defaults to lambda(G)/(4 m^2)
  std::optional<std::int64_t> trees;   // packing; defaults to required_tree_count
  bool force_epsilon = false;
  int exact_cap = 12;
};

// Exact-equality plateaus for ideal loads. Concrete loads are bucketed with a
// new level whenever consecutive distinct values differ by more than `gap`.
PSPChain psp_from_loads(const LoadVector& loads, const Graph& g, const Rational& gap = Rational(0));

PSPChain loadsweep_psp(const Graph& g, const PSPPolicy& policy);

struct LevelSelection {
  int j = 0;
  int R = 0;
  std::optional<Capacity> theta;  // none means infinity
  Rational lambda;                // lambda_j
};

LevelSelection select_level(const PSPChain& chain, int k, const Graph& g, int enum_cap = 20);

// Integer threshold for kernels: the largest integer below 2 lambda_j, raised
// to theta_j when that is larger, and at least 1.
Capacity kernel_threshold(const LevelSelection& sel);

struct UncrossResult {
  Partition meet;
  Partition join;
  Capacity lhs = 0;  // |E(G/P)| + |E(G/Q)|
  Capacity rhs = 0;  // |E(G/meet)| + |E(G/join)|
  bool holds = false;
};

UncrossResult uncross_partitions(const Partition& p, const Partition& q, const Graph& g);

struct LaminarFamily {
  std::vector<VertexSet> sets;  // normalized sides
  Capacity theta = 0;
  bool refinements_preserved = false;
};

LaminarFamily laminarize_min_borders(const Graph& h, const std::vector<VertexSet>& family);

}  // namespace kcut
