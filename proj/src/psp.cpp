#include "kcut/psp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kcut/mincut.hpp"

namespace kcut {

std::vector<EdgeId> PSPChain::prefix(int i) const {
  std::vector<EdgeId> out;
  for (int l = 1; l <= i; ++l) out.insert(out.end(), level(l).edges.begin(), level(l).edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Groups of edge ids by decreasing load; a new group starts when the drop
// between consecutive distinct values exceeds gap.
std::vector<std::vector<EdgeId>> bucket_loads(const LoadVector& loads, const Rational& gap) {
  std::vector<EdgeId> order(loads.load.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return loads.load[a] > loads.load[b]; });
  std::vector<std::vector<EdgeId>> buckets;
  for (std::size_t i = 0; i < order.size(); ++i) {
    bool fresh = i == 0;
    if (!fresh) {
      Rational drop = loads.load[order[i - 1]] - loads.load[order[i]];
      fresh = gap == Rational(0) ? drop > Rational(0) : drop > gap;
    }
    if (fresh) buckets.emplace_back();
    buckets.back().push_back(order[i]);
  }
  for (auto& b : buckets) std::sort(b.begin(), b.end());
  return buckets;
}

PSPChain build_chain(const Graph& g, std::vector<std::vector<EdgeId>> buckets, const LoadVector* exact) {
  PSPChain chain;
  if (exact == nullptr) {
    // Concrete loads: buckets that do not separate anything, or that break
    // strict monotonicity of strengths, are merged into their successor.
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<EdgeId> removed;
      int before = 1;
      std::vector<std::pair<int, Rational>> stats;
      for (const auto& b : buckets) {
        removed.insert(removed.end(), b.begin(), b.end());
        int after = components(g, removed).size();
        stats.push_back({after - before, after > before ? Rational(static_cast<std::int64_t>(b.size()), after - before)
                                                        : Rational(0)});
        before = after;
      }
      for (std::size_t i = 0; i < buckets.size(); ++i) {
        bool merge_next = stats[i].first == 0 ||
                          (i + 1 < buckets.size() && stats[i + 1].first > 0 && stats[i].second >= stats[i + 1].second);
        if (merge_next && i + 1 < buckets.size()) {
          buckets[i + 1].insert(buckets[i + 1].end(), buckets[i].begin(), buckets[i].end());
          std::sort(buckets[i + 1].begin(), buckets[i + 1].end());
          buckets.erase(buckets.begin() + static_cast<std::ptrdiff_t>(i));
          chain.canonical = false;
          changed = true;
          break;
        }
      }
    }
  }

  chain.partitions.push_back(Partition::whole(g.num_vertices()));
  std::vector<EdgeId> removed;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    PSPLevel level;
    level.index = static_cast<int>(i) + 1;
    level.edges = buckets[i];
    removed.insert(removed.end(), buckets[i].begin(), buckets[i].end());
    Partition p = components(g, removed);
    level.kappa_before = chain.partitions.back().size();
    level.kappa_after = p.size();
    int dk = level.kappa_after - level.kappa_before;
    Rational value(static_cast<std::int64_t>(level.edges.size()));
    if (exact != nullptr) {
      level.lambda = Rational(1) / exact->load[level.edges.front()];
      level.identity_ok = value == Rational(dk) * level.lambda;
      if (!level.identity_ok)
        throw InvariantViolation("level identity violated at level " + std::to_string(level.index) + ": " +
                                 value.str() + " != " + std::to_string(dk) + " * " + level.lambda.str());
    } else {
      KCUT_CHECK(dk > 0, "bucket does not refine the partition");
      level.lambda = value / Rational(dk);
      level.identity_ok = true;
    }
    if (!chain.levels.empty())
      KCUT_CHECK(chain.levels.back().lambda < level.lambda, "strengths are not strictly increasing");
    chain.levels.push_back(std::move(level));
    chain.partitions.push_back(std::move(p));
  }
  return chain;
}

}  // namespace

PSPChain psp_from_loads(const LoadVector& loads, const Graph& g, const Rational& gap) {
  KCUT_REQUIRE(static_cast<int>(loads.load.size()) == g.num_edges(), "load vector does not match the graph");
  if (loads.provenance == LoadProvenance::Ideal) {
    PSPChain chain = build_chain(g, bucket_loads(loads, Rational(0)), &loads);
    chain.source = PSPSource::ExactLoads;
    return chain;
  }
  PSPChain chain = build_chain(g, bucket_loads(loads, gap), nullptr);
  chain.source = PSPSource::Packing;
  chain.trees = loads.t;
  return chain;
}

PSPChain loadsweep_psp(const Graph& g, const PSPPolicy& policy) {
  KCUT_REQUIRE(g.num_vertices() >= 1 && is_connected(g), "PSP needs a connected graph");
  if (policy.kind == PSPPolicy::Exact) {
    if (g.num_edges() == 0) return psp_from_loads(LoadVector{}, g);
    return psp_from_loads(ideal_loads(g, {policy.exact_cap}), g);
  }
  KCUT_REQUIRE(g.num_vertices() >= 2, "packing needs at least two vertices");
  std::int64_t m = g.num_edges();
  Capacity lambda = global_min_cut(MultiGraph::from_graph(g)).value;
  Rational bound = Rational(lambda) / Rational(4 * m * m);
  Rational eps = policy.epsilon.value_or(bound);
  KCUT_REQUIRE(eps > Rational(0), "epsilon must be positive");
  bool canonical = true;
  if (eps > bound) {
    if (!policy.force_epsilon)
      throw PreconditionError("epsilon " + eps.str() + " exceeds lambda/(4m^2) = " + bound.str() +
                              "; set force_epsilon for a best-effort chain");
    canonical = false;
  }
  std::int64_t required = eps < Rational(2) ? required_tree_count(lambda, m, eps) : 1;
  std::int64_t t = policy.trees.value_or(required);
  if (t < required) canonical = false;

  LoadVector loads = concrete_loads(greedy_tree_packing(g, t));
  Rational gap = Rational(2) * eps / Rational(lambda);
  PSPChain chain = psp_from_loads(loads, g, gap);
  chain.epsilon = eps;
  chain.graph_min_cut = lambda;
  chain.canonical = chain.canonical && canonical;
  // Every load should sit within eps/lambda of its level's ideal value 1/lambda_i.
  Rational tol = eps / Rational(lambda);
  for (const auto& level : chain.levels) {
    Rational ideal = Rational(1) / level.lambda;
    for (EdgeId e : level.edges)
      if ((loads.load[e] - ideal).abs() > tol) chain.loads_consistent = false;
  }
  return chain;
}

LevelSelection select_level(const PSPChain& chain, int k, const Graph& g, int enum_cap) {
  int n = g.num_vertices();
  KCUT_REQUIRE(k >= 2, "k must be at least 2");
  KCUT_REQUIRE(k <= n, "k exceeds the number of vertices");
  LevelSelection sel;
  for (int i = 1; i <= chain.depth(); ++i) {
    if (chain.partition(i).size() >= k) {
      sel.j = i;
      break;
    }
  }
  KCUT_CHECK(sel.j > 0, "the chain never reaches k parts");
  sel.R = k - chain.partition(sel.j - 1).size();
  sel.lambda = chain.level(sel.j).lambda;
  for (const VertexSet& part : chain.partition(sel.j - 1).blocks()) {
    if (part.size() < 4) continue;
    InducedSubgraph sub = induced_subgraph(g, part);
    auto c = nontrivial_min_cut(MultiGraph::from_graph(sub.graph, sub.to_parent), enum_cap);
    if (c && (!sel.theta || c->value < *sel.theta)) sel.theta = c->value;
  }
  return sel;
}

Capacity kernel_threshold(const LevelSelection& sel) {
  Capacity t = (Rational(2) * sel.lambda).ceil() - 1;
  if (sel.theta && *sel.theta > t) t = *sel.theta;
  return std::max<Capacity>(t, 1);
}

UncrossResult uncross_partitions(const Partition& p, const Partition& q, const Graph& g) {
  int n = g.num_vertices();
  KCUT_REQUIRE(p.num_vertices() == n && q.num_vertices() == n, "partitions must cover the graph");
  std::vector<int> meet_label(n);
  std::vector<int> join_parent(p.size() + q.size());
  std::iota(join_parent.begin(), join_parent.end(), 0);
  auto find = [&](int x) {
    while (join_parent[x] != x) x = join_parent[x] = join_parent[join_parent[x]];
    return x;
  };
  for (int v = 0; v < n; ++v) {
    meet_label[v] = p.block_of(v) * q.size() + q.block_of(v);
    int a = find(p.block_of(v));
    int b = find(p.size() + q.block_of(v));
    if (a != b) join_parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> join_label(n);
  for (int v = 0; v < n; ++v) join_label[v] = find(p.block_of(v));
  UncrossResult out{Partition::from_labels(meet_label), Partition::from_labels(join_label)};
  out.lhs = static_cast<Capacity>(crossing_edges(g, p).size() + crossing_edges(g, q).size());
  out.rhs = static_cast<Capacity>(crossing_edges(g, out.meet).size() + crossing_edges(g, out.join).size());
  out.holds = out.lhs >= out.rhs;
  return out;
}

namespace {

bool cuts_cross(const VertexSet& x, const VertexSet& y, int n) {
  auto both = set_intersection(x, y).size();
  if (both == 0 || both == x.size() || both == y.size()) return false;
  return set_union(x, y).size() != static_cast<std::size_t>(n);
}

int boundary_components(const Graph& h, const std::vector<VertexSet>& sets) {
  std::set<EdgeId> removed;
  for (const auto& s : sets)
    for (EdgeId e : cut(h, s).edges) removed.insert(e);
  std::vector<EdgeId> r(removed.begin(), removed.end());
  return components(h, r).size();
}

}  // namespace

LaminarFamily laminarize_min_borders(const Graph& h, const std::vector<VertexSet>& family) {
  int n = h.num_vertices();
  LaminarFamily out;
  auto nt = nontrivial_min_cut(MultiGraph::from_graph(h));
  KCUT_REQUIRE(nt.has_value(), "graph has no non-trivial cut");
  out.theta = nt->value;
  auto nontrivial = [&](const VertexSet& s) { return s.size() >= 2 && n - static_cast<int>(s.size()) >= 2; };
  auto value = [&](const VertexSet& s) { return cut(h, s).value; };

  std::vector<VertexSet> sets;
  for (VertexSet s : family) {
    std::sort(s.begin(), s.end());
    KCUT_REQUIRE(nontrivial(s), "family member is trivial");
    KCUT_REQUIRE(value(s) == out.theta, "family member does not have the non-trivial minimum value");
    s = normalized_side(s, n);
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }

  for (int guard = 0;; ++guard) {
    KCUT_CHECK(guard < 100000, "uncrossing did not terminate");
    bool found = false;
    for (std::size_t a = 0; a < sets.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < sets.size() && !found; ++b) {
        if (!cuts_cross(sets[a], sets[b], n)) continue;
        found = true;
        const VertexSet x = sets[a];
        const VertexSet y = sets[b];
        std::vector<VertexSet> atoms{set_intersection(x, y), set_difference(x, y), set_difference(y, x),
                                     complement(set_union(x, y), n)};
        std::vector<VertexSet> keep;
        for (auto& atom : atoms) {
          if (!nontrivial(atom) || value(atom) != out.theta) continue;
          VertexSet norm = normalized_side(atom, n);
          if (std::find(keep.begin(), keep.end(), norm) == keep.end()) keep.push_back(norm);
        }
        // Atoms are pairwise disjoint, so at most a complementary pair can repeat a cut.
        sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(b));
        sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(a));
        if (keep.empty()) keep.push_back(x);
        for (auto& s : keep)
          if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
      }
    }
    if (!found) break;
  }
  std::sort(sets.begin(), sets.end());
  out.refinements_preserved = boundary_components(h, sets) >= boundary_components(h, family);
  out.sets = std::move(sets);
  return out;
}

}  // namespace kcut
