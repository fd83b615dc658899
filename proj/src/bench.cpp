#include "kcut/bench.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

namespace kcut {

const char* const kBenchCsvVersion = "kcut-bench-v1";

std::vector<BenchEntry> parse_suite(const Json& suite) {
  if (!suite.is_object() || !suite.contains("records") || !suite["records"].is_array())
    throw PreconditionError("bench suite must be an object with a \"records\" array");
  std::vector<BenchEntry> out;
  for (const auto& rec : suite["records"]) {
    if (!rec.contains("instance") || !rec.contains("k"))
      throw PreconditionError("bench record needs \"instance\" and \"k\"");
    BenchEntry base;
    base.instance = InstanceSpec::parse(rec["instance"].get<std::string>());
    if (rec.contains("mode")) base.mode = parse_solve_mode(rec["mode"].get<std::string>());
    if (rec.contains("trim")) base.trim = parse_trim_mode(rec["trim"].get<std::string>());
    std::vector<int> ks;
    if (rec["k"].is_array())
      ks = rec["k"].get<std::vector<int>>();
    else
      ks.push_back(rec["k"].get<int>());
    for (int k : ks) {
      BenchEntry e = base;
      e.k = k;
      out.push_back(e);
    }
  }
  return out;
}

namespace {

BenchRecord run_one(int index, const BenchEntry& entry, const SolverConfig& base) {
  BenchRecord r;
  r.index = index;
  r.instance = entry.instance.str();
  r.k = entry.k;
  r.mode = to_string(entry.mode);
  r.trim = to_string(entry.trim);
  try {
    Graph g = generate(entry.instance);
    r.n = g.num_vertices();
    r.m = g.num_edges();
    SolverConfig cfg = base;
    cfg.mode = entry.mode;
    cfg.trim = entry.trim;
    cfg.threads = 1;
    auto start = std::chrono::steady_clock::now();
    Solution sol = min_kcut(g, entry.k, cfg);
    auto stop = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    r.value = sol.value;
    r.verified = verify_solution(g, sol, entry.k).ok;
    r.leaves = sol.stats.leaves;
    r.max_fanout = sol.stats.max_fanout;
    r.R = sol.audit.R;
    r.leaf_bound_ok = sol.stats.leaf_bound_ok;
    r.kernel_total = sol.stats.kernel_total;
    r.psp_levels = sol.audit.psp_levels;
    r.ok = r.verified;
    if (!r.verified) r.error = "verification failed";
  } catch (const std::exception& ex) {
    r.ok = false;
    r.error = ex.what();
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchEntry>& entries, const SolverConfig& base, int threads) {
  std::vector<BenchRecord> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = run_one(static_cast<int>(i), entries[i], base);
  };
  int workers = std::max(1, std::min<int>(threads, static_cast<int>(entries.size())));
  if (workers == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::string bench_csv_header() {
  return std::string("# ") + kBenchCsvVersion +
         "\nindex,instance,n,m,k,mode,trim,ok,value,verified,wall_ms,leaves,max_fanout,R,leaf_bound_ok,"
         "kernel_total,psp_levels,error";
}

std::string bench_csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.index << ',' << csv_field(r.instance) << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.mode << ','
      << r.trim << ',' << (r.ok ? 1 : 0) << ',' << r.value << ',' << (r.verified ? 1 : 0) << ',' << std::fixed
      << std::setprecision(3) << r.wall_ms << ',' << r.leaves << ',' << r.max_fanout << ',' << r.R << ','
      << (r.leaf_bound_ok ? 1 : 0) << ',' << r.kernel_total << ',' << r.psp_levels << ',' << csv_field(r.error);
  return out.str();
}

Json bench_json(const std::vector<BenchRecord>& records) {
  Json out;
  out["version"] = kBenchCsvVersion;
  Json list = Json::array();
  for (const auto& r : records) {
    Json j;
    j["index"] = r.index;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["mode"] = r.mode;
    j["trim"] = r.trim;
    j["ok"] = r.ok;
    j["value"] = r.value;
    j["verified"] = r.verified;
    j["wall_ms"] = r.wall_ms;
    j["leaves"] = r.leaves;
    j["max_fanout"] = r.max_fanout;
    j["R"] = r.R;
    j["leaf_bound_ok"] = r.leaf_bound_ok;
    j["kernel_total"] = r.kernel_total;
    j["psp_levels"] = r.psp_levels;
    if (!r.error.empty()) j["error"] = r.error;
    list.push_back(std::move(j));
  }
  out["records"] = std::move(list);
  return out;
}

}  // namespace kcut
