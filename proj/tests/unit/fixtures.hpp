#pragma once

#include <vector>

#include "kcut/generate.hpp"
#include "kcut/graph.hpp"

namespace kcut::fixtures {

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

// Two K4s joined by the bridge (0, 4).
inline Graph ex1() { return bridged_cliques(4, 4, 1); }

// Two K5s joined by (0, 5) and (1, 6).
inline Graph double_k5() { return bridged_cliques(5, 5, 2); }

// Three K4s in a row joined by single edges.
inline Graph clique_chain() {
  std::vector<Edge> edges;
  for (int c = 0; c < 3; ++c)
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) edges.push_back({4 * c + u, 4 * c + v});
  edges.push_back({3, 4});
  edges.push_back({7, 8});
  return Graph(12, edges);
}

inline VertexSet range(int a, int b) {
  VertexSet out;
  for (int v = a; v < b; ++v) out.push_back(v);
  return out;
}

}  // namespace kcut::fixtures
