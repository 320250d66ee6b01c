#pragma once

#include <iosfwd>
#include <string>

#include "mdl/graph.hpp"

namespace mdl {

// Text format:
//   p <n> <m>
//   e <u> <v>     (one line per edge, 0-based endpoints)
// Blank lines and lines starting with '#' are ignored.
Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph_text(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace mdl
