#pragma once

#include <filesystem>
#include <iosfwd>

#include "pinning/graph.hpp"

namespace pinning {

// Text format: a line holding the node count N, then one "u v" pair per line
// (0-based, whitespace separated). '#' starts a comment running to end of
// line; blank lines are ignored. Errors carry the 1-based line number.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace pinning
