#pragma once

#include <string>
#include <vector>

#include "kcut/generate.hpp"
#include "kcut/json_io.hpp"
#include "kcut/solver.hpp"

namespace kcut {

struct BenchEntry {
  InstanceSpec instance;
  int k = 2;
  SolveMode mode = SolveMode::PspKt;
  TrimMode trim = TrimMode::Safe;
};

// {"records": [{"instance": "gnp:8,0.5,7", "k": [2, 3], "mode": "psp-kt", "trim": "safe"}]}
// A list of k values expands into one entry per value.
std::vector<BenchEntry> parse_suite(const Json& suite);

struct BenchRecord {
  int index = 0;
  std::string instance;
  int n = 0;
  int m = 0;
  int k = 0;
  std::string mode;
  std::string trim;
  bool ok = false;
  Capacity value = -1;
  bool verified = false;
  double wall_ms = 0.0;
  std::int64_t leaves = 0;
  int max_fanout = 0;
  int R = 0;
  bool leaf_bound_ok = false;
  int kernel_total = 0;
  int psp_levels = 0;
  std::string error;
};

// Records run on up to `threads` workers; output is ordered by index.
std::vector<BenchRecord> run_bench(const std::vector<BenchEntry>& entries, const SolverConfig& base, int threads = 1);

extern const char* const kBenchCsvVersion;
std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);
Json bench_json(const std::vector<BenchRecord>& records);

}  // namespace kcut
