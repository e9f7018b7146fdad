#pragma once

#include <vector>

#include "cliquespec/graph.hpp"

namespace cliquespec {

struct EndClique {
  std::vector<Vertex> clique;  // sorted
  Vertex cut_vertex;
};

/// Blocks of a connected graph that contain exactly one cut vertex.
std::vector<EndClique> end_cliques(const Graph& g);

/// Detaches the end clique `clique` from its end cut vertex `from` and
/// re-glues it at cut vertex `to`. `to == from` returns g unchanged.
/// Throws GraphError if g is not a clique tree, `clique` is not an end
/// clique with end cut vertex `from`, or `to` is not a cut vertex outside
/// clique \ {from}.
Graph move_clique(const Graph& g, const std::vector<Vertex>& clique, Vertex from, Vertex to);

/// Turns every block's vertex set into a clique.
Graph complete_blocks(const Graph& g);

/// Removes the given edges; throws GraphError if an edge is missing or the
/// result is disconnected.
Graph delete_block_edges(const Graph& g, const std::vector<Edge>& edges);

}  // namespace cliquespec
