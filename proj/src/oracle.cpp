#include "kcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "kcut/loads.hpp"
#include "kcut/psp.hpp"

namespace kcut {

namespace {

std::uint64_t fnv(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

bool block_connected(const Graph& g, const VertexSet& block) {
  if (block.size() <= 1) return true;
  std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (Vertex v : block) in[v] = 1;
  std::vector<Vertex> stack{block.front()};
  seen[block.front()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(v))
      if (in[inc.to] && !seen[inc.to]) {
        seen[inc.to] = 1;
        ++count;
        stack.push_back(inc.to);
      }
  }
  return count == block.size();
}

// Restricted-growth enumeration of labelings. visit(label, kappa, crossing)
// is called on complete labelings; prune(i, kappa, crossing) may cut a prefix.
template <class Prune, class Visit>
void rgs_enumerate(const Graph& g, Prune prune, Visit visit) {
  int n = g.num_vertices();
  std::vector<int> label(n, -1);
  auto rec = [&](auto&& self, int i, int kappa, Capacity crossing) -> void {
    if (prune(i, kappa, crossing)) return;
    if (i == n) {
      visit(label, kappa, crossing);
      return;
    }
    for (int b = 0; b <= kappa; ++b) {
      label[i] = b;
      Capacity add = 0;
      for (const auto& inc : g.neighbors(i))
        if (inc.to < i && label[inc.to] != b) ++add;
      self(self, i + 1, b == kappa ? kappa + 1 : kappa, crossing + add);
    }
    label[i] = -1;
  };
  rec(rec, 0, 0, 0);
}

void require_cap(int n, int cap, const std::string& what) {
  if (n > cap)
    throw CapabilityError(what + ": " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

}  // namespace

std::uint64_t instance_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv(h, static_cast<std::uint64_t>(g.num_vertices()));
  for (const Edge& e : g.edges()) h = fnv(fnv(h, static_cast<std::uint64_t>(e.u)), static_cast<std::uint64_t>(e.v));
  return h;
}

OracleResult brute_min_kcut(const Graph& g, int k, int oracle_cap) {
  int n = g.num_vertices();
  require_cap(n, oracle_cap, "brute_min_kcut vertices");
  KCUT_REQUIRE(k >= 1 && k <= n, "k out of range");
  Capacity best = std::numeric_limits<Capacity>::max();
  std::vector<int> best_label;
  rgs_enumerate(
      g,
      [&](int i, int kappa, Capacity crossing) { return crossing >= best || kappa + (n - i) < k; },
      [&](const std::vector<int>& label, int kappa, Capacity crossing) {
        if (kappa < k) return;
        best = crossing;
        best_label = label;
      });
  Partition witness = Partition::from_labels(best_label);
  OracleResult out;
  out.query = "min-kcut k=" + std::to_string(k);
  out.method = "restricted-growth enumeration of set partitions, pruned on partial crossing count";
  out.instance_hash = instance_hash(g);
  out.edges = crossing_edges(g, witness);
  out.partition = components(g, out.edges);
  out.edges = crossing_edges(g, *out.partition);
  KCUT_CHECK(static_cast<Capacity>(out.edges.size()) == best, "oracle witness does not re-evaluate");
  KCUT_CHECK(out.partition->size() >= k, "oracle witness has too few components");
  out.value = Rational(best);
  return out;
}

std::vector<Partition> brute_optimal_kcuts(const Graph& g, int k, int oracle_cap) {
  int n = g.num_vertices();
  Capacity opt = brute_min_kcut(g, k, oracle_cap).value.num();
  std::vector<Partition> out;
  rgs_enumerate(
      g,
      [&](int i, int kappa, Capacity crossing) { return crossing > opt || kappa > k || kappa + (n - i) < k; },
      [&](const std::vector<int>& label, int kappa, Capacity crossing) {
        if (kappa != k || crossing != opt) return;
        Partition p = Partition::from_labels(label);
        for (const auto& b : p.blocks())
          if (!block_connected(g, b)) return;
        out.push_back(std::move(p));
      });
  return out;
}

OracleResult brute_nontrivial_min_cut(const Graph& g) {
  int n = g.num_vertices();
  require_cap(n, 20, "brute_nontrivial_min_cut vertices");
  OracleResult out;
  out.query = "nontrivial-min-cut";
  out.method = "exhaustive subsets containing vertex 1 with 2 <= |S| <= n-2";
  out.instance_hash = instance_hash(g);
  out.exists = false;
  if (n < 4) return out;
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  Capacity best = std::numeric_limits<Capacity>::max();
  VertexSet best_side;
  std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    std::uint32_t s = (rest << 1) | 1u;
    int size = std::popcount(s);
    if (size < 2 || size > n - 2) continue;
    Capacity value = 0;
    for (std::uint32_t f = s; f; f &= f - 1) value += std::popcount(adj[std::countr_zero(f)] & full & ~s);
    if (value > best) continue;
    VertexSet side;
    for (std::uint32_t f = s; f; f &= f - 1) side.push_back(std::countr_zero(f));
    if (value < best || side < best_side) {
      best = value;
      best_side = std::move(side);
    }
  }
  out.exists = true;
  out.value = Rational(best);
  out.set = best_side;
  CutSide check = cut(g, best_side);
  out.edges = check.edges;
  KCUT_CHECK(check.value == best, "oracle cut does not re-evaluate");
  return out;
}

OracleResult brute_partition_value(const Graph& g) {
  int n = g.num_vertices();
  require_cap(n, 12, "brute_partition_value vertices");
  KCUT_REQUIRE(n >= 2 && is_connected(g), "partition value needs a connected graph with two vertices");
  bool have = false;
  Rational best;
  int best_kappa = 0;
  Partition best_p;
  rgs_enumerate(
      g, [](int, int, Capacity) { return false; },
      [&](const std::vector<int>& label, int kappa, Capacity crossing) {
        if (kappa < 2) return;
        Rational value(crossing, kappa - 1);
        if (have && value > best) return;
        Partition p = Partition::from_labels(label);
        for (const auto& b : p.blocks())
          if (!block_connected(g, b)) return;
        if (have && value == best) {
          if (kappa > best_kappa) return;
          if (kappa == best_kappa && !(p.blocks() < best_p.blocks())) return;
        }
        have = true;
        best = value;
        best_kappa = kappa;
        best_p = std::move(p);
      });
  OracleResult out;
  out.query = "partition-value";
  out.method = "restricted-growth enumeration of set partitions with connected blocks";
  out.instance_hash = instance_hash(g);
  out.value = best;
  out.partition = best_p;
  out.edges = crossing_edges(g, best_p);
  KCUT_CHECK(Rational(static_cast<Capacity>(out.edges.size()), best_p.size() - 1) == best,
             "oracle partition does not re-evaluate");
  return out;
}

OracleResult brute_islands(const Graph& g, const Partition& pi, int r) {
  int n = g.num_vertices();
  KCUT_REQUIRE(pi.num_vertices() == n, "partition does not match the graph");
  require_cap(n, 18, "brute_islands active vertices");
  require_cap(r, 3, "brute_islands r");
  KCUT_REQUIRE(r >= 0, "r must be non-negative");
  OracleResult out;
  out.query = "islands r=" + std::to_string(r);
  out.method = "enumeration of all r-subsets in increasing order";
  out.instance_hash = instance_hash(g);
  out.value = Rational(0);
  if (r == 0) return out;

  auto same = [&](Vertex a, Vertex b) { return pi.block_of(a) == pi.block_of(b); };
  auto cost_of = [&](const VertexSet& s) {
    Capacity c = 0;
    for (Vertex v : s)
      for (const auto& inc : g.neighbors(v))
        if (same(v, inc.to)) ++c;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (same(s[i], s[j]) && g.find_edge(s[i], s[j])) --c;
    return c;
  };
  Capacity best = std::numeric_limits<Capacity>::max();
  VertexSet best_set;
  VertexSet cur;
  std::vector<int> taken(pi.size(), 0);
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      Capacity c = cost_of(cur);
      if (c < best) {
        best = c;
        best_set = cur;
      }
      return;
    }
    for (int v = start; v < n; ++v) {
      int b = pi.block_of(v);
      if (taken[b] + 1 >= static_cast<int>(pi.block(b).size())) continue;
      ++taken[b];
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
      --taken[b];
    }
  };
  rec(rec, 0);
  if (best_set.empty()) {
    out.exists = false;
    return out;
  }
  out.value = Rational(best);
  out.set = best_set;
  return out;
}

namespace {

Capacity cut_inside(const Graph& g, const VertexSet& within, const VertexSet& side) {
  Capacity value = 0;
  for (Vertex v : side)
    for (const auto& inc : g.neighbors(v))
      if (std::binary_search(within.begin(), within.end(), inc.to) &&
          !std::binary_search(side.begin(), side.end(), inc.to))
        ++value;
  return value;
}

struct ShapeSearch {
  const Graph& g;
  const Partition& q;
  std::optional<Capacity> theta;
  std::set<std::pair<std::vector<VertexSet>, bool>> seen;
  bool found_any = false;
  bool found_exact = false;
  int best_r = -1;

  // Distinct blocks of q inside part, in order of their minimum vertex.
  std::vector<int> blocks_in(const VertexSet& part) const {
    std::vector<int> out;
    for (Vertex v : part) {
      int b = q.block_of(v);
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
  }

  void run(std::vector<VertexSet> parts, bool exact) {
    std::sort(parts.begin(), parts.end());
    if (!seen.insert({parts, exact}).second) return;
    bool terminal = true;
    int r = 0;
    for (const auto& part : parts) {
      auto bs = blocks_in(part);
      int big = 0;
      for (int b : bs) big += q.block(b).size() >= 2 ? 1 : 0;
      if (big > 1) terminal = false;
      r += static_cast<int>(bs.size()) - 1;
    }
    if (terminal) {
      found_any = true;
      if (exact) found_exact = true;
      if (best_r < 0 || r < best_r) best_r = r;
    }
    if (!theta) return;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
      const VertexSet& part = parts[pi];
      auto bs = blocks_in(part);
      int count = static_cast<int>(bs.size());
      if (count < 2 || count > 20) continue;
      // Unions holding the first block; the complement is the other side.
      for (std::uint32_t mask = 0; mask + 1 < (1u << (count - 1)); ++mask) {
        VertexSet side = q.block(bs[0]);
        for (int i = 1; i < count; ++i)
          if (mask & (1u << (i - 1))) side = set_union(side, q.block(bs[i]));
        VertexSet other = set_difference(part, side);
        if (side.size() < 2 || other.size() < 2) continue;
        Capacity value = cut_inside(g, part, side);
        if (value > *theta) continue;
        std::vector<VertexSet> next = parts;
        next[pi] = side;
        next.push_back(other);
        run(std::move(next), exact && value == *theta);
      }
    }
  }
};

}  // namespace

NormalFormResult brute_normal_form_exists(const Graph& g, int k) {
  int n = g.num_vertices();
  require_cap(n, 10, "brute_normal_form_exists vertices");
  PSPPolicy policy;
  policy.kind = PSPPolicy::Exact;
  PSPChain chain = loadsweep_psp(g, policy);
  LevelSelection sel = select_level(chain, k, g);
  const Partition& start = chain.partition(sel.j - 1);
  NormalFormResult out;
  for (const Partition& q : brute_optimal_kcuts(g, k, n)) {
    ++out.optimal_partitions;
    if (!q.refines(start)) continue;
    ++out.refining_optimal_partitions;
    ShapeSearch search{g, q, sel.theta, {}, false, false, -1};
    search.run(start.blocks(), true);
    if (!search.found_any) continue;
    out.exists = true;
    out.exact_theta_witness = out.exact_theta_witness || search.found_exact;
    if (out.r < 0 || search.best_r < out.r) out.r = search.best_r;
  }
  return out;
}

int brute_kernel_preservation_violations(const Graph& g, const Kernel& kernel) {
  const VertexSet& part = kernel.part;
  int n = static_cast<int>(part.size());
  require_cap(n, 16, "kernel preservation check part size");
  (void)g;
  const Graph& local = kernel.local;
  int violations = 0;
  if (n < 4) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : local.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    std::uint32_t s = (rest << 1) | 1u;
    int size = std::popcount(s);
    if (size < 2 || size > n - 2) continue;
    Capacity value = 0;
    for (std::uint32_t f = s; f; f &= f - 1) value += std::popcount(adj[std::countr_zero(f)] & full & ~s);
    if (value > kernel.theta) continue;
    VertexSet supers;
    int covered = 0;
    for (std::uint32_t f = s; f; f &= f - 1) supers.push_back(kernel.supernode_of[std::countr_zero(f)]);
    std::sort(supers.begin(), supers.end());
    supers.erase(std::unique(supers.begin(), supers.end()), supers.end());
    for (int x : supers) covered += kernel.size(x);
    if (covered != size) {
      ++violations;
      continue;
    }
    if (cut(kernel.graph, supers).value != value) ++violations;
  }
  return violations;
}

OracleResult OracleCache::get_or_compute(std::uint64_t hash, const std::string& query,
                                         const std::function<OracleResult()>& compute) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find({hash, query});
    if (it != entries_.end()) {
      ++hits_;
      return it->second;
    }
  }
  OracleResult r = compute();
  std::lock_guard<std::mutex> lock(mu_);
  entries_.emplace(std::make_pair(hash, query), r);
  return r;
}

std::size_t OracleCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

}  // namespace kcut
