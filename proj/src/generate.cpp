#include "kcut/generate.hpp"

#include <random>
#include <sstream>

#include "kcut/dimacs.hpp"

namespace kcut {

InstanceSpec InstanceSpec::bridged_cliques(int a, int b, int bridges) {
  InstanceSpec s;
  s.family = BridgedCliques;
  s.a = a;
  s.b = b;
  s.c = bridges;
  return s;
}

InstanceSpec InstanceSpec::cycle_of_cliques(int count, int size, int join) {
  InstanceSpec s;
  s.family = CycleOfCliques;
  s.a = count;
  s.b = size;
  s.c = join;
  return s;
}

InstanceSpec InstanceSpec::gnp(int n, double p, std::uint64_t seed) {
  InstanceSpec s;
  s.family = Gnp;
  s.a = n;
  s.p = p;
  s.seed = seed;
  return s;
}

InstanceSpec InstanceSpec::file(std::string path) {
  InstanceSpec s;
  s.family = File;
  s.path = std::move(path);
  return s;
}

InstanceSpec InstanceSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("instance spec '" + text + "' has no ':'");
  std::string family = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  if (family == "file") return file(args);
  std::vector<std::string> parts;
  std::stringstream ss(args);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  auto need = [&](std::size_t count) {
    if (parts.size() != count)
      throw PreconditionError("instance spec '" + text + "' needs " + std::to_string(count) + " arguments");
  };
  try {
    if (family == "bridged-cliques") {
      need(3);
      return bridged_cliques(std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]));
    }
    if (family == "cycle-of-cliques") {
      need(3);
      return cycle_of_cliques(std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]));
    }
    if (family == "gnp") {
      need(3);
      return gnp(std::stoi(parts[0]), std::stod(parts[1]), std::stoull(parts[2]));
    }
  } catch (const std::logic_error&) {
    throw PreconditionError("instance spec '" + text + "' has a malformed number");
  }
  throw PreconditionError("unknown instance family '" + family + "'");
}

std::string InstanceSpec::str() const {
  std::ostringstream out;
  switch (family) {
    case BridgedCliques:
      out << "bridged-cliques:" << a << ',' << b << ',' << c;
      break;
    case CycleOfCliques:
      out << "cycle-of-cliques:" << a << ',' << b << ',' << c;
      break;
    case Gnp:
      out << "gnp:" << a << ',' << p << ',' << seed;
      break;
    case File:
      out << "file:" << path;
      break;
  }
  return out.str();
}

namespace {

void add_clique(std::vector<Edge>& edges, int first, int size) {
  for (int u = first; u < first + size; ++u)
    for (int v = u + 1; v < first + size; ++v) edges.push_back({u, v});
}

}  // namespace

Graph bridged_cliques(int a, int b, int bridges) {
  KCUT_REQUIRE(a >= 1 && b >= 1, "clique sizes must be positive");
  KCUT_REQUIRE(bridges >= 1 && bridges <= std::min(a, b), "bridge count must lie in 1..min(a, b)");
  std::vector<Edge> edges;
  add_clique(edges, 0, a);
  add_clique(edges, a, b);
  for (int i = 0; i < bridges; ++i) edges.push_back({i, a + i});
  return Graph(a + b, edges);
}

Graph cycle_of_cliques(int count, int size, int join) {
  KCUT_REQUIRE(count >= 3, "a ring needs at least three cliques");
  KCUT_REQUIRE(size >= 1, "clique size must be positive");
  KCUT_REQUIRE(join >= 1 && join <= size - size / 2, "join width must lie in 1..size - size/2");
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i) add_clique(edges, i * size, size);
  for (int i = 0; i < count; ++i) {
    int next = (i + 1) % count;
    for (int t = 0; t < join; ++t) {
      int u = i * size + t;
      int v = next * size + size / 2 + t;
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return Graph(count * size, edges);
}

Graph gnp(int n, double p, std::uint64_t seed) {
  KCUT_REQUIRE(n >= 1, "n must be positive");
  KCUT_REQUIRE(p > 0.0 && p <= 1.0, "p must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  const double scale = 1.0 / 9007199254740992.0;  // 2^-53
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() >> 11) * scale < p) edges.push_back({u, v});
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw PreconditionError("gnp(" + std::to_string(n) + ", " + std::to_string(p) +
                          ") produced no connected sample in 10000 draws");
}

Graph generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case InstanceSpec::BridgedCliques:
      return bridged_cliques(spec.a, spec.b, spec.c);
    case InstanceSpec::CycleOfCliques:
      return cycle_of_cliques(spec.a, spec.b, spec.c);
    case InstanceSpec::Gnp:
      return gnp(spec.a, spec.p, spec.seed);
    case InstanceSpec::File:
      return load_dimacs_file(spec.path);
  }
  throw PreconditionError("unknown instance family");
}

}  // namespace kcut
