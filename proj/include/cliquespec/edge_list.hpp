#pragma once

#include <string>
#include <string_view>

#include "cliquespec/graph.hpp"

namespace cliquespec {

// Text format: a header line "n m", then m lines "u v" with 0-indexed
// endpoints separated by a single space. Lines end in LF. Writers emit
// edges in lexicographic order; the parser accepts any order.

std::string to_edge_list(const Graph& g);

/// Throws GraphError with a line-numbered diagnostic on malformed input.
Graph parse_edge_list(std::string_view text);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace cliquespec
