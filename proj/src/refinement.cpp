#include "kcut/refinement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "kcut/mincut.hpp"

namespace kcut {

const char* to_string(BorderFamily family) { return family == BorderFamily::Forest ? "forest" : "complete"; }

BorderFamily parse_border_family(const std::string& text) {
  if (text == "forest") return BorderFamily::Forest;
  if (text == "complete") return BorderFamily::Complete;
  throw PreconditionError("unknown border family '" + text + "'");
}

std::vector<VertexSet> enumerate_view_cuts(const KernelView& view, Capacity limit) {
  const Kernel& k = view.kernel();
  const VertexSet& act = view.active();
  int p = static_cast<int>(act.size());
  std::vector<VertexSet> out;
  if (p < 2) return out;
  std::vector<int> local(k.graph.num_nodes(), -1);
  for (int i = 0; i < p; ++i) local[act[i]] = i;
  std::vector<VertexSet> origin(p);
  std::vector<int> size(p);
  for (int i = 0; i < p; ++i) {
    origin[i] = k.graph.origin(act[i]);
    size[i] = k.size(act[i]);
  }
  std::vector<CapEdge> edges;
  for (const CapEdge& e : k.graph.edges())
    if (local[e.a] >= 0 && local[e.b] >= 0) edges.push_back({local[e.a], local[e.b], e.cap});
  MultiGraph h(std::move(origin), edges);
  int total = 0;
  for (int s : size) total += s;
  if (total < 4) return out;

  // side[i]: 1 in S, 2 in T, 0 unassigned.
  std::vector<char> side(p, 0);
  VertexSet in_s, in_t;
  auto rec = [&](auto&& self, int i, Capacity cross, int size_s) -> void {
    if (cross > limit) return;
    if (!in_t.empty() && i < p && min_set_cut(h, in_s, in_t).value > limit) return;
    if (i == p) {
      if (!in_t.empty() && size_s >= 2 && total - size_s >= 2) {
        VertexSet result;
        for (int x : in_s) result.push_back(act[x]);
        out.push_back(std::move(result));
      }
      return;
    }
    for (int choice : {1, 2}) {
      Capacity add = 0;
      for (const auto& inc : h.neighbors(i))
        if (side[inc.to] != 0 && side[inc.to] != choice) add += h.edge(inc.edge).cap;
      side[i] = static_cast<char>(choice);
      VertexSet& group = choice == 1 ? in_s : in_t;
      group.push_back(i);
      self(self, i + 1, cross + add, size_s + (choice == 1 ? size[i] : 0));
      group.pop_back();
      side[i] = 0;
    }
  };
  side[0] = 1;
  in_s.push_back(0);
  rec(rec, 1, 0, size[0]);
  return out;
}

namespace {

std::vector<Border> complete_borders(const std::vector<KernelView>& views, Capacity theta) {
  std::vector<Border> out;
  for (int vi = 0; vi < static_cast<int>(views.size()); ++vi) {
    const KernelView& view = views[vi];
    const Kernel& k = view.kernel();
    std::map<VertexSet, const ForestSplit*> forest;
    for (const ForestSplit& s : k.splits) {
      forest.emplace(s.side_a, &s);
      forest.emplace(s.side_b, &s);
    }
    VertexSet all = view.active();
    for (VertexSet& kside : enumerate_view_cuts(view, theta)) {
      CutSide lifted = lift_border(view, kside);
      Border b;
      b.part = k.part_id;
      b.view = vi;
      b.depth = -1;
      auto it = forest.find(kside);
      if (it == forest.end()) it = forest.find(set_difference(all, kside));
      if (it != forest.end()) {
        b.split = it->second->id;
        b.depth = it->second->depth;
      }
      b.kernel_side = std::move(kside);
      b.side = lifted.side;
      b.other = set_difference(view.vertices(), b.side);
      b.value = lifted.value;
      b.edges = std::move(lifted.edges);
      KCUT_CHECK(b.side.size() >= 2 && b.other.size() >= 2, "border with a trivial side");
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Border> forest_borders(const std::vector<KernelView>& views, Capacity theta) {
  struct Slot {
    int part;
    int split;
    int view;
  };
  std::vector<Slot> slots;
  for (int vi = 0; vi < static_cast<int>(views.size()); ++vi) {
    const KernelView& view = views[vi];
    const Kernel& k = view.kernel();
    for (const ForestSplit& s : k.splits) {
      if (s.side_a.empty() || s.side_b.empty()) continue;
      bool inside = true;
      for (int x : s.side_a) inside = inside && view.is_active(x);
      for (int x : s.side_b) inside = inside && view.is_active(x);
      if (!inside) continue;
      slots.push_back({k.part_id, s.id, vi});
    }
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return a.part != b.part ? a.part < b.part : a.split < b.split;
  });

  std::vector<Border> out;
  std::set<std::pair<int, std::vector<EdgeId>>> seen;
  for (const Slot& slot : slots) {
    const KernelView& view = views[slot.view];
    const Kernel& k = view.kernel();
    const ForestSplit& s = k.splits[slot.split];
    int size_a = 0;
    int size_b = 0;
    for (int x : s.side_a) size_a += k.size(x);
    for (int x : s.side_b) size_b += k.size(x);
    if (size_a < 2 || size_b < 2) continue;
    if (static_cast<int>(s.side_a.size()) >= view.num_active()) continue;
    Capacity kv = view.kernel_cut_value(s.side_a);
    if (kv > theta) continue;
    CutSide lifted = lift_border(view, s.side_a);
    if (!seen.insert({slot.view, lifted.edges}).second) continue;
    Border b;
    b.part = slot.part;
    b.split = slot.split;
    b.view = slot.view;
    b.depth = s.depth;
    b.kernel_side = s.side_a;
    b.side = lifted.side;
    b.other = set_difference(view.vertices(), b.side);
    b.value = lifted.value;
    b.edges = std::move(lifted.edges);
    KCUT_CHECK(b.side.size() >= 2 && b.other.size() >= 2, "border with a trivial side");
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<Border> build_candidate_borders(const std::vector<KernelView>& views, Capacity theta,
                                            BorderFamily family) {
  return family == BorderFamily::Forest ? forest_borders(views, theta) : complete_borders(views, theta);
}

std::vector<Border> pendant_peel_independent(const std::vector<Border>& borders) {
  std::vector<int> order(borders.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (borders[a].view != borders[b].view) return borders[a].view < borders[b].view;
    return borders[a].depth > borders[b].depth;
  });
  std::map<int, std::set<EdgeId>> used;
  std::vector<char> keep(borders.size(), 0);
  for (int i : order) {
    auto& u = used[borders[i].view];
    bool disjoint = std::none_of(borders[i].edges.begin(), borders[i].edges.end(),
                                 [&](EdgeId e) { return u.count(e) > 0; });
    if (!disjoint) continue;
    keep[i] = 1;
    u.insert(borders[i].edges.begin(), borders[i].edges.end());
  }
  std::vector<Border> out;
  for (std::size_t i = 0; i < borders.size(); ++i)
    if (keep[i]) out.push_back(borders[i]);
  return out;
}

Capacity island_cost(const Graph& h, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  Capacity boundary = cut(h, sorted).value;
  Capacity inside = internal_edge_count(h, sorted);
  Capacity degrees = 0;
  for (Vertex v : sorted) degrees += h.degree(v);
  KCUT_CHECK(boundary + inside == degrees - inside, "island cost identity failed");
  return boundary + inside;
}

IslandSolution solve_islands(const Partition& pi, const Graph& g, int r) {
  int n = g.num_vertices();
  KCUT_REQUIRE(pi.num_vertices() == n, "partition does not match the graph");
  KCUT_REQUIRE(r >= 0, "island count must be non-negative");
  int capacity = 0;
  for (const auto& b : pi.blocks()) capacity += static_cast<int>(b.size()) - 1;
  KCUT_REQUIRE(r <= capacity, "cannot isolate " + std::to_string(r) + " vertices while keeping every part non-empty");

  IslandSolution out;
  if (r == 0) return out;

  std::vector<int> deg(n, 0);
  for (const Edge& e : g.edges())
    if (pi.block_of(e.u) == pi.block_of(e.v)) {
      ++deg[e.u];
      ++deg[e.v];
    }
  std::vector<Vertex> order;  // candidate vertices, increasing id
  for (int v = 0; v < n; ++v)
    if (pi.block(pi.block_of(v)).size() >= 2) order.push_back(v);
  int m = static_cast<int>(order.size());
  std::vector<int> pos(n, -1);
  for (int p = 0; p < m; ++p) pos[order[p]] = p;

  std::vector<int> credit(n, 0);
  std::vector<int> used(pi.size(), 0);
  VertexSet chosen;
  Capacity best = std::numeric_limits<Capacity>::max();
  VertexSet best_set;

  auto pairs = [](int k) { return static_cast<Capacity>(k) * (k - 1) / 2; };

  // Depth-first in lexicographic order of S; only strict improvements are
  // kept, so the first optimum found is the lexicographically smallest.
  auto explore = [&](auto&& self, int start, Capacity cost) -> void {
    int d = static_cast<int>(chosen.size());
    if (d == r) {
      if (cost < best) {
        best = cost;
        best_set = chosen;
      }
      return;
    }
    int k = r - d;
    if (m - start < k) return;
    // suffix[p] holds the k smallest marginal costs among positions >= p.
    std::vector<std::vector<Capacity>> suffix(m - start + 1);
    for (int p = m - 1; p >= start; --p) {
      auto& cur = suffix[p - start];
      const auto& next = suffix[p + 1 - start];
      Capacity val = deg[order[p]] - credit[order[p]];
      cur.reserve(k);
      std::size_t i = 0;
      bool placed = false;
      while (static_cast<int>(cur.size()) < k && (i < next.size() || !placed)) {
        if (!placed && (i >= next.size() || val <= next[i])) {
          cur.push_back(val);
          placed = true;
        } else {
          cur.push_back(next[i++]);
        }
      }
    }
    auto sum_first = [](const std::vector<Capacity>& v, int count) {
      Capacity s = 0;
      for (int i = 0; i < count && i < static_cast<int>(v.size()); ++i) s += v[i];
      return s;
    };
    if (best != std::numeric_limits<Capacity>::max() &&
        cost + sum_first(suffix[0], k) - pairs(k) >= best)
      return;
    std::vector<Capacity> merged;
    for (int p = start; p <= m - k; ++p) {
      Vertex u = order[p];
      int block = pi.block_of(u);
      if (used[block] + 1 >= static_cast<int>(pi.block(block).size())) continue;
      Capacity marginal = deg[u] - credit[u];
      Capacity child = cost + marginal;
      if (best != std::numeric_limits<Capacity>::max()) {
        int rest = k - 1;
        Capacity lb = child;
        if (rest > 0) {
          // Smallest values after p once u's neighbours gain one credit.
          merged.assign(suffix[p + 1 - start].begin(), suffix[p + 1 - start].end());
          for (const auto& inc : g.neighbors(u)) {
            int q = pos[inc.to];
            if (q > p && pi.block_of(inc.to) == block) merged.push_back(deg[inc.to] - credit[inc.to] - 1);
          }
          std::sort(merged.begin(), merged.end());
          lb += sum_first(merged, rest) - pairs(rest);
        }
        if (lb >= best) continue;
      }
      chosen.push_back(u);
      ++used[block];
      for (const auto& inc : g.neighbors(u))
        if (pi.block_of(inc.to) == block) ++credit[inc.to];
      self(self, p + 1, child);
      for (const auto& inc : g.neighbors(u))
        if (pi.block_of(inc.to) == block) --credit[inc.to];
      --used[block];
      chosen.pop_back();
    }
  };
  explore(explore, 0, 0);
  KCUT_CHECK(best_set.size() == static_cast<std::size_t>(r), "islands search found no feasible set");

  out.S = best_set;
  out.cost = best;
  std::map<int, VertexSet> groups;
  for (Vertex v : best_set) groups[pi.block_of(v)].push_back(v);
  Capacity check = 0;
  for (auto& [block, vs] : groups) {
    InducedSubgraph sub = induced_subgraph(g, pi.block(block));
    VertexSet local;
    for (Vertex v : vs)
      local.push_back(static_cast<Vertex>(std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), v) -
                                          sub.to_parent.begin()));
    Capacity c = island_cost(sub.graph, local);
    check += c;
    out.per_part.push_back({block, vs});
    out.per_part_cost.push_back(c);
  }
  KCUT_CHECK(check == out.cost, "island cost breakdown does not add up");
  return out;
}

namespace {

Capacity induced_degree(const Graph& g, const VertexSet& within, Vertex v) {
  Capacity d = 0;
  for (const auto& inc : g.neighbors(v))
    if (std::binary_search(within.begin(), within.end(), inc.to)) ++d;
  return d;
}

Capacity cut_within(const Graph& g, const VertexSet& within, const VertexSet& side) {
  Capacity value = 0;
  for (Vertex v : side)
    for (const auto& inc : g.neighbors(v))
      if (std::binary_search(within.begin(), within.end(), inc.to) &&
          !std::binary_search(side.begin(), side.end(), inc.to))
        ++value;
  return value;
}

std::vector<VertexSet> sorted_parts(std::vector<VertexSet> parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const VertexSet& p) { return p.empty(); }),
              parts.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

ScheduleOutcome island_then_border(const Graph& g, const VertexSet& c, Vertex v, const VertexSet& x) {
  KCUT_REQUIRE(std::binary_search(c.begin(), c.end(), v), "vertex is not in the part");
  KCUT_REQUIRE(is_subset(x, c), "border side is not inside the part");
  ScheduleOutcome out;
  out.total = induced_degree(g, c, v);
  VertexSet rest = set_difference(c, {v});
  VertexSet side = set_difference(x, {v});
  out.total += cut_within(g, rest, side);
  out.parts = sorted_parts({{v}, side, set_difference(rest, side)});
  return out;
}

ScheduleOutcome border_then_island(const Graph& g, const VertexSet& c, Vertex v, const VertexSet& x) {
  KCUT_REQUIRE(std::binary_search(c.begin(), c.end(), v), "vertex is not in the part");
  KCUT_REQUIRE(is_subset(x, c), "border side is not inside the part");
  ScheduleOutcome out;
  VertexSet other = set_difference(c, x);
  out.total = cut_within(g, c, x);
  const VertexSet& home = std::binary_search(x.begin(), x.end(), v) ? x : other;
  out.total += induced_degree(g, home, v);
  out.parts = sorted_parts({{v}, set_difference(x, {v}), set_difference(other, {v})});
  return out;
}

}  // namespace kcut
