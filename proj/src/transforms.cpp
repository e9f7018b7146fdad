#include "cliquespec/transforms.hpp"

#include <algorithm>
#include <string>

namespace cliquespec {

std::vector<EndClique> end_cliques(const Graph& g) {
  auto bd = block_decomposition(g);
  std::vector<EndClique> out;
  for (const auto& block : bd.blocks) {
    std::vector<Vertex> cuts;
    for (Vertex v : block)
      if (bd.is_cut_vertex(v)) cuts.push_back(v);
    if (cuts.size() == 1) out.push_back({block, cuts.front()});
  }
  return out;
}

Graph move_clique(const Graph& g, const std::vector<Vertex>& clique, Vertex from, Vertex to) {
  if (!is_clique_tree(g)) throw GraphError("move_clique: input is not a clique tree");
  auto sorted = clique;
  std::sort(sorted.begin(), sorted.end());
  auto ends = end_cliques(g);
  auto it = std::find_if(ends.begin(), ends.end(), [&](const EndClique& e) { return e.clique == sorted; });
  if (it == ends.end()) throw GraphError("move_clique: vertex set is not an end clique");
  if (it->cut_vertex != from) {
    throw GraphError("move_clique: " + std::to_string(from) + " is not the end cut vertex of the clique");
  }
  if (to == from) return g;
  if (std::binary_search(sorted.begin(), sorted.end(), to)) {
    throw GraphError("move_clique: target " + std::to_string(to) + " lies inside the clique");
  }
  if (!block_decomposition(g).is_cut_vertex(to)) {
    throw GraphError("move_clique: target " + std::to_string(to) + " is not a cut vertex");
  }

  Graph out = g;
  for (Vertex u : sorted) {
    if (u == from) continue;
    out.remove_edge(from, u);
    out.add_edge(to, u);
  }
  return out;
}

Graph complete_blocks(const Graph& g) {
  Graph out = g;
  for (const auto& block : block_decomposition(g).blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) out.add_edge(block[i], block[j]);
  return out;
}

Graph delete_block_edges(const Graph& g, const std::vector<Edge>& edges) {
  Graph out = g;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !out.adjacent(u, v)) {
      throw GraphError("delete_block_edges: (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    }
    out.remove_edge(u, v);
  }
  if (!is_connected(out)) throw GraphError("delete_block_edges: removal disconnects the graph");
  return out;
}

}  // namespace cliquespec
