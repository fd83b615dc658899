#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/kernel.hpp"
#include "kcut/rational.hpp"

namespace kcut {

struct OracleResult {
  std::string query;
  std::string method;
  std::uint64_t instance_hash = 0;
  bool exists = true;
  Rational value;
  std::optional<Partition> partition;
  VertexSet set;
  std::vector<EdgeId> edges;
};

std::uint64_t instance_hash(const Graph& g);

// Minimum number of edges whose removal leaves at least k components.
OracleResult brute_min_kcut(const Graph& g, int k, int oracle_cap = 12);

// Every partition into exactly k connected blocks attaining the minimum.
std::vector<Partition> brute_optimal_kcuts(const Graph& g, int k, int oracle_cap = 12);

OracleResult brute_nontrivial_min_cut(const Graph& g);

// Phi(G) by plain enumeration of set partitions.
OracleResult brute_partition_value(const Graph& g);

OracleResult brute_islands(const Graph& g, const Partition& pi, int r);

struct NormalFormResult {
  bool exists = false;
  int r = -1;
  bool exact_theta_witness = false;  // a witness whose borders all have value theta_j
  int optimal_partitions = 0;
  int refining_optimal_partitions = 0;
};

NormalFormResult brute_normal_form_exists(const Graph& g, int k);

// Non-trivial cuts of G[part] with value <= theta that split a core of the
// kernel, or whose kernel value differs. Needs |part| <= 16.
int brute_kernel_preservation_violations(const Graph& g, const Kernel& kernel);

// Replays results by (instance hash, query).
class OracleCache {
 public:
  OracleResult get_or_compute(std::uint64_t hash, const std::string& query,
                              const std::function<OracleResult()>& compute);
  std::size_t size() const;
  std::size_t hits() const { return hits_; }

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::uint64_t, std::string>, OracleResult> entries_;
  std::size_t hits_ = 0;
};

}  // namespace kcut
