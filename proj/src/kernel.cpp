#include "kcut/kernel.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "kcut/mincut.hpp"

namespace kcut {

const char* to_string(TrimMode mode) { return mode == TrimMode::Safe ? "safe" : "compact"; }

TrimMode parse_trim_mode(const std::string& text) {
  if (text == "safe") return TrimMode::Safe;
  if (text == "compact") return TrimMode::Compact;
  throw PreconditionError("unknown trimming mode '" + text + "' (expected safe or compact)");
}

int Kernel::position(Vertex v) const {
  auto it = std::lower_bound(part.begin(), part.end(), v);
  if (it == part.end() || *it != v) return -1;
  return static_cast<int>(it - part.begin());
}

namespace {

int certificate_forests(Capacity theta, int n) {
  Capacity f = std::min<Capacity>(theta + 1, std::max(n, 1));
  return static_cast<int>(std::max<Capacity>(f, 1));
}

// Minimum non-trivial cut of q (local ids) if its value is at most theta.
std::optional<CutSide> small_cut(const Graph& q, const VertexSet& labels, Capacity theta, int enum_cap) {
  auto c = nontrivial_min_cut(MultiGraph::from_graph(q, labels), enum_cap);
  if (!c || c->value > theta) return std::nullopt;
  return c;
}

}  // namespace

CutOrCertificate cut_or_certificate(const Graph& q, Capacity theta, int enum_cap) {
  KCUT_REQUIRE(theta >= 1, "threshold must be positive");
  Graph h = sparse_certificate(q, certificate_forests(theta, q.num_vertices()));
  CutOrCertificate out;
  auto c = small_cut(h, {}, theta, enum_cap);
  if (!c) {
    out.certified = true;
    return out;
  }
  out.cut = cut(q, c->side);
  KCUT_CHECK(out.cut->value == c->value, "certificate changed a small cut");
  return out;
}

Kernel kt_decompose(const Graph& c, Capacity theta, const KernelOptions& opt) {
  VertexSet all(c.num_vertices());
  for (int v = 0; v < c.num_vertices(); ++v) all[v] = v;
  return kt_decompose(c, all, theta, opt, 0);
}

Kernel kt_decompose(const Graph& g, const VertexSet& part, Capacity theta, const KernelOptions& opt, int part_id) {
  KCUT_REQUIRE(theta >= 1, "threshold must be positive");
  KCUT_REQUIRE(!part.empty() && is_sorted_set(part), "part must be a non-empty sorted vertex set");
  Kernel k;
  k.part_id = part_id;
  k.theta = theta;
  k.mode = opt.mode;
  k.part = part;
  InducedSubgraph sub = induced_subgraph(g, part);
  k.local = std::move(sub.graph);
  k.local_to_parent_edge = std::move(sub.edge_to_parent);
  const Graph& local = k.local;
  int n = local.num_vertices();
  KCUT_REQUIRE(is_connected(local), "part must induce a connected subgraph");

  Graph cert = sparse_certificate(local, certificate_forests(theta, n));

  // Pieces are processed smallest vertex sequence first.
  std::set<std::pair<VertexSet, int>> queue;
  auto make_node = [&](VertexSet vs, int parent) {
    ForestNode node;
    node.id = static_cast<int>(k.nodes.size());
    node.parent = parent;
    node.depth = parent < 0 ? 0 : k.nodes[parent].depth + 1;
    node.vertices = std::move(vs);
    if (parent >= 0) k.nodes[parent].children.push_back(node.id);
    k.nodes.push_back(node);
    return node.id;
  };
  VertexSet everything(n);
  for (int v = 0; v < n; ++v) everything[v] = v;
  queue.insert({everything, make_node(everything, -1)});

  std::vector<char> in_piece(n, 0);
  while (!queue.empty()) {
    auto [q, id] = *queue.begin();
    queue.erase(queue.begin());
    if (q.size() == 1) {
      k.nodes[id].kind = NodeKind::Core;
      continue;
    }
    InducedSubgraph hq = induced_subgraph(cert, q);
    if (auto c = small_cut(hq.graph, q, theta, opt.enum_cap)) {
      VertexSet a;
      for (int x : c->side) a.push_back(q[x]);
      std::sort(a.begin(), a.end());
      VertexSet b = set_difference(q, a);
      ForestSplit split;
      split.id = static_cast<int>(k.splits.size());
      split.node = id;
      split.depth = k.nodes[id].depth;
      split.value = c->value;
      split.vertices_a = a;
      split.vertices_b = b;
      k.nodes[id].kind = NodeKind::Split;
      k.nodes[id].split = split.id;
      k.splits.push_back(std::move(split));
      int ia = make_node(a, id);
      int ib = make_node(b, id);
      queue.insert({a, ia});
      queue.insert({b, ib});
      continue;
    }
    // Certified. The whole part needs no trimming: a cut that splits it
    // would have to be trivial.
    if (id == 0) {
      k.nodes[id].kind = NodeKind::Core;
      continue;
    }
    for (int v : q) in_piece[v] = 1;
    VertexSet trimmed;
    for (int v : q) {
      int d = 0;
      for (const auto& inc : local.neighbors(v)) d += in_piece[inc.to];
      if (d <= theta) trimmed.push_back(v);
    }
    for (int v : q) in_piece[v] = 0;
    if (trimmed.empty()) {
      k.nodes[id].kind = NodeKind::Core;
      continue;
    }
    k.nodes[id].kind = NodeKind::Trimmed;
    for (int v : trimmed) k.nodes[make_node({v}, id)].kind = NodeKind::TrimmedLeaf;
    VertexSet rest = set_difference(q, trimmed);
    if (!rest.empty()) queue.insert({rest, make_node(rest, id)});
  }

  // Leaves become groups.
  std::vector<int> group(n, -1);
  std::vector<VertexSet> members;
  std::vector<int> leaf_of_group;
  for (const ForestNode& node : k.nodes) {
    if (node.kind != NodeKind::Core && node.kind != NodeKind::TrimmedLeaf) continue;
    for (int v : node.vertices) group[v] = static_cast<int>(members.size());
    members.push_back(node.vertices);
    leaf_of_group.push_back(node.id);
  }
  for (int v = 0; v < n; ++v) KCUT_CHECK(group[v] >= 0, "forest leaves do not cover the part");

  std::vector<int> leaf_group = group;
  std::vector<char> absorbed(members.size(), 0);
  if (opt.mode == TrimMode::Compact && n <= opt.compact_check_cap) {
    std::vector<int> order;
    for (std::size_t gi = 0; gi < members.size(); ++gi)
      if (k.nodes[leaf_of_group[gi]].kind == NodeKind::TrimmedLeaf) order.push_back(static_cast<int>(gi));
    std::sort(order.begin(), order.end(), [&](int a, int b) { return members[a][0] < members[b][0]; });
    for (int gi : order) {
      int v = members[gi][0];
      int target = -1;
      for (const auto& inc : local.neighbors(v)) {
        int gu = group[inc.to];
        if (members[gu].size() >= 2 && (target < 0 || inc.to < target)) target = inc.to;
      }
      if (target < 0) continue;
      int gx = group[target];
      const VertexSet& x = members[gx];
      // Safe iff every cut separating {v, w} from x exceeds theta.
      bool safe = true;
      for (int w = 0; w < n && safe; ++w) {
        if (w == v || group[w] == gx) continue;
        VertexSet src{std::min(v, w), std::max(v, w)};
        if (min_set_cut_value(local, src, x, theta) <= theta) safe = false;
      }
      if (!safe) continue;
      members[gx].push_back(v);
      std::sort(members[gx].begin(), members[gx].end());
      members[gi].clear();
      group[v] = gx;
      absorbed[gi] = 1;
      ++k.absorbed;
    }
  }

  Partition grouping = Partition::from_labels(group);
  k.graph = contract(MultiGraph::from_graph(local, part), grouping);
  k.supernode_of.resize(n);
  for (int v = 0; v < n; ++v) k.supernode_of[v] = grouping.block_of(v);

  auto side_nodes = [&](const VertexSet& vs) {
    VertexSet out;
    for (int v : vs)
      if (!absorbed[leaf_group[v]]) out.push_back(k.supernode_of[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto to_original = [&](VertexSet& vs) {
    for (int& v : vs) v = part[v];
  };
  for (ForestSplit& split : k.splits) {
    split.side_a = side_nodes(split.vertices_a);
    split.side_b = side_nodes(split.vertices_b);
    KCUT_CHECK(set_intersection(split.side_a, split.side_b).empty(), "split sides share a supernode");
    to_original(split.vertices_a);
    to_original(split.vertices_b);
  }
  for (ForestNode& node : k.nodes) to_original(node.vertices);
  int total = 0;
  for (int x = 0; x < k.graph.num_nodes(); ++x) total += k.graph.size(x);
  KCUT_CHECK(total == n, "supernode sizes do not add up to the part size");
  return k;
}

KernelView::KernelView(std::shared_ptr<const Kernel> kernel) : kernel_(std::move(kernel)) {
  active_.resize(kernel_->graph.num_nodes());
  for (int x = 0; x < kernel_->graph.num_nodes(); ++x) active_[x] = x;
}

KernelView::KernelView(std::shared_ptr<const Kernel> kernel, VertexSet active)
    : kernel_(std::move(kernel)), active_(std::move(active)) {}

bool KernelView::is_active(int x) const { return std::binary_search(active_.begin(), active_.end(), x); }

VertexSet KernelView::vertices() const { return origin_of(kernel_->graph, active_); }

int KernelView::total_size() const {
  int total = 0;
  for (int x : active_) total += kernel_->graph.size(x);
  return total;
}

Capacity KernelView::kernel_cut_value(const VertexSet& side) const {
  const MultiGraph& h = kernel_->graph;
  std::vector<char> state(h.num_nodes(), 0);
  for (int x : active_) state[x] = 1;
  for (int x : side) {
    KCUT_REQUIRE(state[x] == 1, "side supernode is not active in the view");
    state[x] = 2;
  }
  Capacity value = 0;
  for (int x : side)
    for (const auto& inc : h.neighbors(x))
      if (state[inc.to] == 1) value += h.edge(inc.edge).cap;
  return value;
}

KernelView restrict_view(const KernelView& parent, const VertexSet& child_vertices) {
  const Kernel& k = parent.kernel();
  VertexSet active;
  for (Vertex v : child_vertices) {
    int pos = k.position(v);
    KCUT_REQUIRE(pos >= 0, "vertex " + std::to_string(v) + " is not in the kernel's part");
    active.push_back(k.supernode_of[pos]);
  }
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  int covered = 0;
  for (int x : active) {
    KCUT_REQUIRE(parent.is_active(x), "child vertices leave the parent view");
    covered += k.graph.size(x);
  }
  if (covered != static_cast<int>(child_vertices.size()))
    throw InvariantViolation("child vertex set splits a core of the kernel");
  return KernelView(parent.kernel_ptr(), std::move(active));
}

CutSide lift_border(const KernelView& view, const VertexSet& kernel_side) {
  KCUT_REQUIRE(!kernel_side.empty(), "border side is empty");
  KCUT_REQUIRE(static_cast<int>(kernel_side.size()) < view.num_active(), "border side is the whole view");
  const Kernel& k = view.kernel();
  std::vector<char> state(k.part.size(), 0);
  for (int x : view.active())
    for (Vertex v : k.graph.origin(x)) state[k.position(v)] = 1;
  for (int x : kernel_side) {
    KCUT_REQUIRE(view.is_active(x), "border side leaves the view");
    for (Vertex v : k.graph.origin(x)) state[k.position(v)] = 2;
  }
  CutSide out;
  out.side = origin_of(k.graph, kernel_side);
  for (EdgeId e = 0; e < k.local.num_edges(); ++e) {
    int a = state[k.local.edge(e).u];
    int b = state[k.local.edge(e).v];
    if (a && b && a != b) out.edges.push_back(k.local_to_parent_edge[e]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.value = static_cast<Capacity>(out.edges.size());
  KCUT_CHECK(out.value == view.kernel_cut_value(kernel_side), "lifted value differs from the kernel value");
  return out;
}

KernelSizeReport kernel_size_report(const std::vector<KernelView>& views) {
  KernelSizeReport out;
  for (const auto& v : views) {
    out.per_view.push_back(v.num_active());
    out.total += v.num_active();
  }
  return out;
}

}  // namespace kcut
