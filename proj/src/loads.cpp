#include "kcut/loads.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace kcut {

namespace {

using Mask = std::uint32_t;

bool mask_connected(Mask block, const std::vector<Mask>& adj) {
  Mask seen = block & (~block + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= block & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == block;
}

std::vector<VertexSet> blocks_from_labels(const std::vector<int>& label, int kappa) {
  std::vector<VertexSet> blocks(kappa);
  for (int v = 0; v < static_cast<int>(label.size()); ++v) blocks[label[v]].push_back(v);
  return blocks;
}

std::string graph_key(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ':';
  for (const Edge& e : g.edges()) out << e.u << ',' << e.v << ';';
  return out.str();
}

struct ValueCache {
  std::mutex mu;
  std::map<std::string, PartitionValue> entries;
};

ValueCache& value_cache() {
  static ValueCache cache;
  return cache;
}

PartitionValue enumerate_partition_value(const Graph& g) {
  int n = g.num_vertices();
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  std::vector<int> label(n, 0);
  std::vector<Mask> block_mask(n, 0);
  std::vector<int> cross_at(n + 1, 0);

  bool have = false;
  Rational best_value;
  int best_kappa = 0;
  std::vector<VertexSet> best_blocks;

  // label[i] is chosen with crossing edges to earlier vertices accumulated.
  auto recurse = [&](auto&& self, int i, int kappa) -> void {
    if (i == n) {
      if (kappa < 2) return;
      for (int b = 0; b < kappa; ++b)
        if (!mask_connected(block_mask[b], adj)) return;
      Rational value(cross_at[n], kappa - 1);
      if (have) {
        if (value > best_value) return;
        if (value == best_value) {
          if (kappa > best_kappa) return;
          if (kappa == best_kappa) {
            auto blocks = blocks_from_labels(label, kappa);
            if (!(blocks < best_blocks)) return;
          }
        }
      }
      have = true;
      best_value = value;
      best_kappa = kappa;
      best_blocks = blocks_from_labels(label, kappa);
      return;
    }
    Mask earlier = (Mask{1} << i) - 1;
    int to_earlier = std::popcount(adj[i] & earlier);
    for (int b = 0; b <= kappa && b < n; ++b) {
      label[i] = b;
      int same = std::popcount(adj[i] & block_mask[b]);
      cross_at[i + 1] = cross_at[i] + to_earlier - same;
      block_mask[b] |= Mask{1} << i;
      self(self, i + 1, b == kappa ? kappa + 1 : kappa);
      block_mask[b] &= ~(Mask{1} << i);
    }
  };
  label[0] = 0;
  block_mask[0] = 1;
  cross_at[1] = 0;
  recurse(recurse, 1, 1);
  KCUT_CHECK(have, "no partition with at least two connected parts");
  return {best_value, Partition(n, best_blocks)};
}

}  // namespace

PartitionValue partition_value(const Graph& g, const ExactLoadOptions& opt) {
  int n = g.num_vertices();
  KCUT_REQUIRE(n >= 2, "partition value needs at least two vertices");
  KCUT_REQUIRE(is_connected(g), "partition value needs a connected graph");
  if (n > opt.exact_cap || n > 30)
    throw CapabilityError("partition value: " + std::to_string(n) + " vertices exceeds exact_cap " +
                          std::to_string(opt.exact_cap) + "; use the packing policy");
  std::string key = graph_key(g);
  auto& cache = value_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  PartitionValue pv = enumerate_partition_value(g);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.entries.emplace(key, pv);
  return pv;
}

LoadVector ideal_loads(const Graph& g, const ExactLoadOptions& opt) {
  KCUT_REQUIRE(is_connected(g), "ideal loads need a connected graph");
  LoadVector out;
  out.load.assign(g.num_edges(), Rational(0));
  out.provenance = LoadProvenance::Ideal;
  std::vector<VertexSet> stack;
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  stack.push_back(all);
  while (!stack.empty()) {
    VertexSet s = std::move(stack.back());
    stack.pop_back();
    if (s.size() <= 1) continue;
    InducedSubgraph sub = induced_subgraph(g, s);
    PartitionValue pv = partition_value(sub.graph, opt);
    Rational load = Rational(1) / pv.value;
    for (EdgeId e : crossing_edges(sub.graph, pv.partition)) out.load[sub.edge_to_parent[e]] = load;
    for (const auto& block : pv.partition.blocks()) {
      VertexSet child;
      for (Vertex v : block) child.push_back(sub.to_parent[v]);
      stack.push_back(std::move(child));
    }
  }
  for (const Rational& r : out.load) KCUT_CHECK(r > Rational(0) && r <= Rational(1), "ideal load out of (0,1]");
  return out;
}

PackingState greedy_tree_packing(const Graph& g, std::int64_t t, bool keep_trees) {
  KCUT_REQUIRE(t >= 1, "tree count must be positive");
  KCUT_REQUIRE(is_connected(g), "tree packing needs a connected graph");
  int n = g.num_vertices();
  int m = g.num_edges();
  PackingState state;
  state.t = t;
  state.usage.assign(m, 0);
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> parent(n);
  std::vector<char> in_tree(m, 0);
  std::vector<EdgeId> bumped;
  std::vector<EdgeId> kept;
  std::vector<EdgeId> merged(m);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto before = [&](EdgeId a, EdgeId b) {
    return state.usage[a] != state.usage[b] ? state.usage[a] < state.usage[b] : a < b;
  };
  for (std::int64_t round = 0; round < t; ++round) {
    std::iota(parent.begin(), parent.end(), 0);
    int taken = 0;
    std::vector<EdgeId> tree;
    for (EdgeId e : order) {
      if (taken == n - 1) break;
      int a = find(g.edge(e).u);
      int b = find(g.edge(e).v);
      if (a == b) continue;
      parent[std::max(a, b)] = std::min(a, b);
      in_tree[e] = 1;
      ++taken;
      if (keep_trees) tree.push_back(e);
    }
    // Tree edges move up by one; both groups stay sorted, so merge them.
    bumped.clear();
    kept.clear();
    for (EdgeId e : order) (in_tree[e] ? bumped : kept).push_back(e);
    for (EdgeId e : bumped) {
      ++state.usage[e];
      in_tree[e] = 0;
    }
    std::merge(kept.begin(), kept.end(), bumped.begin(), bumped.end(), merged.begin(), before);
    order.swap(merged);
    if (keep_trees) {
      std::sort(tree.begin(), tree.end());
      state.trees.push_back(std::move(tree));
    }
  }
  return state;
}

LoadVector concrete_loads(const PackingState& p) {
  KCUT_REQUIRE(p.t >= 1, "tree count must be positive");
  LoadVector out;
  out.provenance = LoadProvenance::Concrete;
  out.t = p.t;
  out.load.reserve(p.usage.size());
  for (std::int64_t u : p.usage) out.load.emplace_back(u, p.t);
  return out;
}

std::int64_t required_tree_count(std::int64_t lambda, std::int64_t m, const Rational& eps) {
  KCUT_REQUIRE(lambda >= 1 && m >= 1, "lambda and m must be positive");
  KCUT_REQUIRE(eps > Rational(0) && eps < Rational(2), "epsilon must lie in (0, 2)");
  long double e = static_cast<long double>(eps.num()) / static_cast<long double>(eps.den());
  long double bound = 6.0L * static_cast<long double>(lambda) * std::log(static_cast<long double>(m)) / (e * e);
  auto t = static_cast<std::int64_t>(std::ceil(bound));
  return std::max<std::int64_t>(t, 1);
}

}  // namespace kcut
