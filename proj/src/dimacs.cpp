#include "kcut/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace kcut {

namespace {

bool parse_int(std::istringstream& ss, long long& out) {
  if (!(ss >> out)) return false;
  return true;
}

bool at_end(std::istringstream& ss) {
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph load_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::unordered_set<long long> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      std::string fmt;
      if (n >= 0) throw ParseError(ParseErrorKind::MalformedHeader, lineno, "second problem line");
      if (!(ss >> fmt) || (fmt != "edge" && fmt != "col") || !parse_int(ss, n) || !parse_int(ss, m) ||
          !at_end(ss) || n < 0 || m < 0 || n > 100000000)
        throw ParseError(ParseErrorKind::MalformedHeader, lineno, "expected 'p edge <n> <m>'");
      edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == "e") {
      if (n < 0) throw ParseError(ParseErrorKind::MalformedHeader, lineno, "edge line before problem line");
      long long u = 0;
      long long v = 0;
      if (!parse_int(ss, u) || !parse_int(ss, v) || !at_end(ss))
        throw ParseError(ParseErrorKind::MalformedLine, lineno, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(ParseErrorKind::VertexOutOfRange, lineno,
                         std::to_string(u) + " " + std::to_string(v) + " not in 1.." + std::to_string(n));
      if (u == v) throw ParseError(ParseErrorKind::SelfLoop, lineno, "vertex " + std::to_string(u));
      long long a = std::min(u, v) - 1;
      long long b = std::max(u, v) - 1;
      if (!seen.insert(a * n + b).second)
        throw ParseError(ParseErrorKind::DuplicateEdge, lineno, std::to_string(u) + " " + std::to_string(v));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(ParseErrorKind::MalformedLine, lineno, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(ParseErrorKind::MalformedHeader, lineno, "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(ParseErrorKind::EdgeCountMismatch, lineno,
                     "header says " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph load_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return load_dimacs(in);
}

Graph load_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return load_dimacs(in);
}

std::string emit_dimacs(const Graph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  return out.str();
}

}  // namespace kcut
