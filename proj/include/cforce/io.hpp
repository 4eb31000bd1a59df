#pragma once

#include <istream>
#include <ostream>

#include "cforce/graph.hpp"

namespace cforce {

// Edge-list text format: the first non-comment line holds n, every later
// non-comment line one "u v" pair (0-indexed decimal). Lines whose first
// non-blank character is '#' are comments; blank lines are skipped; duplicate
// and reversed edges are tolerated; a trailing newline is optional.
Graph read_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace cforce
