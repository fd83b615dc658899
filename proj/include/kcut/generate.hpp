#pragma once

#include <cstdint>
#include <string>

#include "kcut/graph.hpp"

namespace kcut {

struct InstanceSpec {
  enum Family { BridgedCliques, CycleOfCliques, Gnp, File } family = BridgedCliques;
  int a = 4;  // bridged: clique sizes a, b; cycle: count, size
  int b = 4;
  int c = 1;  // bridged: bridges; cycle: join width; gnp: n in a
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string path;

  static InstanceSpec bridged_cliques(int a, int b, int bridges);
  static InstanceSpec cycle_of_cliques(int count, int size, int join);
  static InstanceSpec gnp(int n, double p, std::uint64_t seed);
  static InstanceSpec file(std::string path);

  // "bridged-cliques:4,4,1", "cycle-of-cliques:3,5,2", "gnp:8,0.5,7", "file:g.dimacs"
  static InstanceSpec parse(const std::string& text);
  std::string str() const;
};

// Two cliques K_a and K_b on 0..a-1 and a..a+b-1 joined by edges (i, a+i).
Graph bridged_cliques(int a, int b, int bridges);
// `count` cliques of `size` vertices in a ring; clique i is joined to clique
// i+1 by edges (i*size + t, (i+1)*size + size/2 + t) for t < join.
Graph cycle_of_cliques(int count, int size, int join);
// G(n, p) with mt19937_64: pair (u, v), u < v in lexicographic order, is kept
// when (draw >> 11) * 2^-53 < p. Draws continue on the same stream until the
// sample is connected.
Graph gnp(int n, double p, std::uint64_t seed);

Graph generate(const InstanceSpec& spec);

}  // namespace kcut
