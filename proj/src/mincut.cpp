#include "kcut/mincut.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>

namespace kcut {

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

constexpr Capacity kInf = std::numeric_limits<Capacity>::max() / 4;

class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1), level_(n), iter_(n) {}

  void add_undirected(int a, int b, Capacity cap) {
    add_arc(a, b, cap);
    add_arc(b, a, cap);
  }
  void add_directed(int a, int b, Capacity cap) {
    add_arc(a, b, cap);
    add_arc(b, a, 0);
  }

  // Stops once the flow exceeds `limit` when limit >= 0.
  Capacity max_flow(int s, int t, Capacity limit = -1) {
    Capacity flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (Capacity f = dfs(s, t, kInf)) {
        flow += f;
        if (limit >= 0 && flow > limit) return flow;
      }
    }
    return flow;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a : out_[x]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

  void finalize() {
    out_.assign(head_.size(), {});
    for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) out_[arcs_[a].from].push_back(a);
  }

 private:
  struct Arc {
    int from;
    int to;
    Capacity cap;
  };

  void add_arc(int a, int b, Capacity cap) { arcs_.push_back({a, b, cap}); }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a : out_[x]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Capacity dfs(int x, int t, Capacity pushed) {
    if (x == t) return pushed;
    for (std::size_t& i = iter_[x]; i < out_[x].size(); ++i) {
      int a = out_[x][i];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      Capacity f = dfs(arc.to, t, std::min(pushed, arc.cap));
      if (f > 0) {
        arc.cap -= f;
        arcs_[a ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

CutSide side_to_cut(const MultiGraph& h, const std::vector<char>& in) {
  VertexSet side;
  for (int x = 0; x < h.num_nodes(); ++x)
    if (in[x]) side.push_back(x);
  return cut(h, side);
}

// The supernode holding the smallest original vertex.
int anchor_node(const MultiGraph& h) {
  int best = 0;
  for (int x = 1; x < h.num_nodes(); ++x)
    if (h.origin(x)[0] < h.origin(best)[0]) best = x;
  return best;
}

VertexSet normalize_nodes(const MultiGraph& h, const VertexSet& side) {
  int anchor = anchor_node(h);
  if (std::binary_search(side.begin(), side.end(), anchor)) return side;
  return complement(side, h.num_nodes());
}

int originals_in(const MultiGraph& h, const VertexSet& side) {
  int total = 0;
  for (int x : side) total += h.size(x);
  return total;
}

// Keeps the best normalized candidate under (value, lexicographic origin side).
struct Best {
  const MultiGraph* h;
  std::optional<CutSide> cut;
  VertexSet origin_side;

  void offer(const VertexSet& nodes, Capacity value) {
    if (cut && value > cut->value) return;
    VertexSet norm = normalize_nodes(*h, nodes);
    VertexSet orig = origin_of(*h, norm);
    if (cut && value == cut->value && !lex_less(orig, origin_side)) return;
    cut = kcut::cut(*h, norm);
    KCUT_CHECK(cut->value == value, "cut value bookkeeping mismatch");
    origin_side = std::move(orig);
  }
};

}  // namespace

CutSide min_set_cut(const MultiGraph& h, const VertexSet& sources, const VertexSet& sinks) {
  KCUT_REQUIRE(!sources.empty() && !sinks.empty(), "empty terminal set");
  int n = h.num_nodes();
  FlowNetwork net(n + 2);
  for (const CapEdge& e : h.edges()) net.add_undirected(e.a, e.b, e.cap);
  for (int s : sources) net.add_directed(n, s, kInf);
  for (int t : sinks) {
    KCUT_REQUIRE(!std::binary_search(sources.begin(), sources.end(), t), "source and sink overlap");
    net.add_directed(t, n + 1, kInf);
  }
  net.finalize();
  net.max_flow(n, n + 1);
  auto seen = net.reachable(n);
  seen.resize(n);
  return side_to_cut(h, seen);
}

CutSide min_st_cut(const MultiGraph& h, int s, int t) {
  KCUT_REQUIRE(s != t, "s and t must differ");
  KCUT_REQUIRE(s >= 0 && t >= 0 && s < h.num_nodes() && t < h.num_nodes(), "terminal out of range");
  int n = h.num_nodes();
  FlowNetwork net(n);
  for (const CapEdge& e : h.edges()) net.add_undirected(e.a, e.b, e.cap);
  net.finalize();
  net.max_flow(s, t);
  return side_to_cut(h, net.reachable(s));
}

Capacity min_set_cut_value(const Graph& g, const VertexSet& sources, const VertexSet& sinks, Capacity stop_above) {
  int n = g.num_vertices();
  FlowNetwork net(n + 2);
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v, 1);
  for (int s : sources) net.add_directed(n, s, kInf);
  for (int t : sinks) net.add_directed(t, n + 1, kInf);
  net.finalize();
  return net.max_flow(n, n + 1, stop_above);
}

CutSide global_min_cut(const MultiGraph& h) {
  int n = h.num_nodes();
  KCUT_REQUIRE(n >= 2, "global min cut needs at least two supernodes");
  KCUT_REQUIRE(is_connected(h), "global min cut needs a connected multigraph");

  std::vector<int> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  std::vector<std::vector<std::pair<int, Capacity>>> adj(n);
  for (const CapEdge& e : h.edges()) {
    adj[e.a].push_back({e.b, e.cap});
    adj[e.b].push_back({e.a, e.cap});
  }
  std::vector<VertexSet> members(n);
  for (int x = 0; x < n; ++x) members[x] = {x};
  std::vector<char> alive(n, 1);

  Best best{&h, std::nullopt, {}};
  std::vector<Capacity> key(n);
  std::vector<char> added(n);
  for (int phase = 0; phase < n - 1; ++phase) {
    std::fill(key.begin(), key.end(), 0);
    std::fill(added.begin(), added.end(), 0);
    int start = 0;
    while (!alive[start]) ++start;
    using Item = std::pair<Capacity, int>;
    auto cmp = [](const Item& a, const Item& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second > b.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
    heap.push({0, start});
    int prev = -1;
    int last = -1;
    int remaining = n - phase;
    while (remaining > 0) {
      if (heap.empty()) throw InvariantViolation("multigraph became disconnected");
      auto [k, x] = heap.top();
      heap.pop();
      if (added[x] || k != key[x]) continue;
      added[x] = 1;
      --remaining;
      prev = last;
      last = x;
      for (auto [y0, c] : adj[x]) {
        int y = find(y0);
        if (y == x || added[y]) continue;
        key[y] += c;
        heap.push({key[y], y});
      }
    }
    VertexSet side = members[last];
    std::sort(side.begin(), side.end());
    best.offer(side, key[last]);
    // merge last into prev
    rep[last] = prev;
    alive[last] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    members[last].clear();
    auto& src = adj[last];
    adj[prev].insert(adj[prev].end(), src.begin(), src.end());
    src.clear();
    src.shrink_to_fit();
  }
  return *best.cut;
}

std::optional<CutSide> nontrivial_min_cut(const MultiGraph& h, int enum_cap) {
  int total = h.original_count();
  if (total < 4) return std::nullopt;
  int n = h.num_nodes();
  Best best{&h, std::nullopt, {}};
  auto nontrivial = [&](int inside) { return inside >= 2 && total - inside >= 2; };

  if (total <= enum_cap) {
    int anchor = anchor_node(h);
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
      if (x != anchor) others.push_back(x);
    std::vector<char> in(n, 0);
    std::vector<Capacity> to_side(n, 0);
    in[anchor] = 1;
    for (const auto& inc : h.neighbors(anchor)) to_side[inc.to] += h.edge(inc.edge).cap;
    Capacity value = h.weighted_degree(anchor);
    int inside = h.size(anchor);
    auto flip = [&](int x) {
      if (in[x]) {
        value -= h.weighted_degree(x) - 2 * to_side[x];
        in[x] = 0;
        inside -= h.size(x);
        for (const auto& inc : h.neighbors(x)) to_side[inc.to] -= h.edge(inc.edge).cap;
      } else {
        value += h.weighted_degree(x) - 2 * to_side[x];
        in[x] = 1;
        inside += h.size(x);
        for (const auto& inc : h.neighbors(x)) to_side[inc.to] += h.edge(inc.edge).cap;
      }
    };
    auto consider = [&]() {
      if (!nontrivial(inside)) return;
      if (best.cut && value > best.cut->value) return;
      VertexSet side;
      for (int x = 0; x < n; ++x)
        if (in[x]) side.push_back(x);
      best.offer(side, value);
    };
    int bits = static_cast<int>(others.size());
    consider();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << bits); ++i) {
      int b = std::countr_zero(i);
      flip(others[b]);
      consider();
    }
    return best.cut;
  }

  Capacity lower = 0;
  if (is_connected(h)) {
    CutSide g = global_min_cut(h);
    if (nontrivial(originals_in(h, g.side))) return g;
    lower = g.value;
  }
  // single supernodes carrying two or more original vertices
  for (int x = 0; x < n; ++x)
    if (nontrivial(h.size(x))) best.offer({x}, h.weighted_degree(x));
  // pair isolations
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!nontrivial(h.size(x) + h.size(y))) continue;
      Capacity v = h.weighted_degree(x) + h.weighted_degree(y) - 2 * h.capacity_between(x, y);
      best.offer({x, y}, v);
    }
  }
  if (best.cut && best.cut->value == lower) return best.cut;
  // vertex-disjoint edge pairs
  for (int e1 = 0; e1 < h.num_edges(); ++e1) {
    const CapEdge& a = h.edge(e1);
    for (int e2 = e1 + 1; e2 < h.num_edges(); ++e2) {
      const CapEdge& b = h.edge(e2);
      if (a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b) continue;
      VertexSet s{a.a, a.b};
      VertexSet t{b.a, b.b};
      std::sort(t.begin(), t.end());
      CutSide c = min_set_cut(h, s, t);
      best.offer(c.side, c.value);
      if (best.cut->value == lower) return best.cut;
    }
  }
  return best.cut;
}

Graph sparse_certificate(const Graph& g, int theta) {
  KCUT_REQUIRE(theta >= 1, "certificate threshold must be positive");
  int n = g.num_vertices();
  std::vector<char> taken(g.num_edges(), 0);
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int left = g.num_edges();
  for (int round = 0; round < theta && left > 0; ++round) {
    std::iota(parent.begin(), parent.end(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (taken[e]) continue;
      int a = find(g.edge(e).u);
      int b = find(g.edge(e).v);
      if (a == b) continue;
      parent[std::max(a, b)] = std::min(a, b);
      taken[e] = 1;
      --left;
    }
  }
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (taken[e]) kept.push_back(g.edge(e));
  return Graph(n, kept);
}

}  // namespace kcut
