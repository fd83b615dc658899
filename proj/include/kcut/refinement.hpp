#pragma once

#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/kernel.hpp"

namespace kcut {

struct Border {
  int part = 0;        // part id of the kernel the border comes from
  int split = -1;      // forest split id inside that kernel, or -1
  int view = 0;        // index of the view (current part) it splits
  int depth = 0;       // depth of the split node in the forest, or -1
  VertexSet kernel_side;  // supernodes
  VertexSet side;      // lifted side, original ids
  VertexSet other;     // rest of the current part
  Capacity value = 0;
  std::vector<EdgeId> edges;  // lifted crossing edges
};

// Forest: frontier splits of the decomposition forest only.
// Complete: every non-trivial cut of each view's kernel graph.
enum class BorderFamily { Forest, Complete };

const char* to_string(BorderFamily family);
BorderFamily parse_border_family(const std::string& text);

// Cuts of the view's kernel graph with value at most limit whose sides each
// hold at least two original vertices. Each side contains the first active
// supernode. Branch and bound over the active supernodes, pruned by max-flow.
std::vector<VertexSet> enumerate_view_cuts(const KernelView& view, Capacity limit);

// Candidate borders internal to each view whose two kernel sides hold at
// least two original vertices each, lifted, with value at most theta. Forest
// borders are ordered by (part id, split id), complete ones by view and then
// enumeration order. Equal lifted edge sets inside one view are dropped.
std::vector<Border> build_candidate_borders(const std::vector<KernelView>& views, Capacity theta,
                                            BorderFamily family = BorderFamily::Forest);

// Deepest splits first, keep a border when its edges are disjoint from those
// already kept in the same view. Returned in input order.
std::vector<Border> pendant_peel_independent(const std::vector<Border>& borders);

// |delta(S)| + |E(S)|, cross-checked against sum of degrees minus |E(S)|.
Capacity island_cost(const Graph& h, const VertexSet& s);

struct IslandSolution {
  VertexSet S;
  Capacity cost = 0;
  std::vector<std::pair<int, VertexSet>> per_part;  // (block index, vertices)
  std::vector<Capacity> per_part_cost;
};

// Exact minimum over S with |S| = r of the total isolation cost inside the
// parts of pi. Each part keeps at least one vertex. Ties go to the
// lexicographically smallest S.
IslandSolution solve_islands(const Partition& pi, const Graph& g, int r);

// Outcome of isolating v and splitting C along X, in either order.
struct ScheduleOutcome {
  Capacity total = 0;
  std::vector<VertexSet> parts;  // sorted
};

ScheduleOutcome island_then_border(const Graph& g, const VertexSet& c, Vertex v, const VertexSet& x);
ScheduleOutcome border_then_island(const Graph& g, const VertexSet& c, Vertex v, const VertexSet& x);

}  // namespace kcut
