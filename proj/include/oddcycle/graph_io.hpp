#ifndef ODDCYCLE_GRAPH_IO_HPP
#define ODDCYCLE_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// Text format: optional '#' comment lines, then a header "n m", then exactly
// m lines "u v". Writers emit the canonical orientation 0 <= u < v < n and
// lexicographically sorted edges; readers accept either endpoint order.
// UTF-8, LF newlines. Parse errors carry 1-based line numbers.

Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

std::string graph_to_string(const Graph& g);

}  // namespace oddcycle

#endif
