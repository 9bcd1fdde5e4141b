#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "digitop/graph.hpp"

namespace digitop {

// Line format:
//   v <label>          declare a vertex
//   e <label> <label>  declare an edge between declared vertices
// '#' starts a comment; blank lines are ignored.

Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

/// Vertices in ascending label order, then edges in ascending (min, max) order.
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
void save_graph(const std::string& path, const Graph& g);

}  // namespace digitop
