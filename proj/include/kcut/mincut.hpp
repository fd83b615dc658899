#pragma once

#include <optional>

#include "kcut/graph.hpp"

namespace kcut {

// Stoer-Wagner. Among the minimum cuts of phase the normalized side (the one
// holding the smallest original vertex) that is lexicographically smallest wins.
CutSide global_min_cut(const MultiGraph& h);

// Dinic max-flow; augmenting paths scan incidences in edge id order. The
// returned side is the set reachable from s in the final residual graph.
CutSide min_st_cut(const MultiGraph& h, int s, int t);
// Same, with every supernode of `sources` on one side and `sinks` on the other.
CutSide min_set_cut(const MultiGraph& h, const VertexSet& sources, const VertexSet& sinks);
Capacity min_set_cut_value(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                           Capacity stop_above = -1);

// Minimum cut whose two sides each hold at least two original vertices.
// Sides are normalized; ties go to the lexicographically smallest original side.
std::optional<CutSide> nontrivial_min_cut(const MultiGraph& h, int enum_cap = 20);

// Union of the first theta maximal spanning forests, each built by Kruskal in
// edge id order over the edges not yet taken. Vertex ids are preserved.
Graph sparse_certificate(const Graph& g, int theta);

// True when a precedes b as sorted original-vertex sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace kcut
