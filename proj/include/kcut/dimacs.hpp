#pragma once

#include <istream>
#include <string>

#include "kcut/graph.hpp"

namespace kcut {

// DIMACS edge format: "p edge <n> <m>", "e <u> <v>" with 1-based ids,
// comment lines starting with 'c'.
Graph load_dimacs(std::istream& in);
Graph load_dimacs_string(const std::string& text);
Graph load_dimacs_file(const std::string& path);
std::string emit_dimacs(const Graph& g, const std::string& comment = {});

}  // namespace kcut
