#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cliquespec/graph.hpp"

namespace cliquespec {

// Vertex labelling of the constructed families is fixed so that edge-list
// output is stable:
//  - path_graph(n): 0-1-...-(n-1).
//  - broom(n): the path 0-1-2, with pendant vertices 3..n-1 attached to 0.
//  - clique_path: cliques laid out left to right. Each clique lists its
//    shared vertex first; the last vertex of clique i is the vertex it
//    shares with clique i+1.
//  - clique_star: central clique {0 = w, 1 = w', 2..}, then the end cliques
//    at w in argument order, then the clique at w'.

Graph path_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
/// K_{1,n-1} centred at vertex 0.
Graph star_graph(int n);

/// T(n-3,1): P3 with n-3 pendant vertices appended at one end. n >= 4.
Graph broom(int n);

/// Chain of cliques, consecutive ones sharing one vertex. Sizes >= 2.
Graph clique_path(const std::vector<int>& sizes);

/// Central clique of size `bridge_size` holding the two cut vertices w and
/// w'; one clique per entry of `end_sizes` glued at w, and one clique of
/// size `last_size` glued at w'. The clique count is end_sizes.size() + 2.
Graph clique_star(const std::vector<int>& end_sizes, int bridge_size, int last_size);

struct CliqueAttachment {
  int clique;     // index of an earlier clique
  Vertex vertex;  // global vertex id belonging to that clique
};

/// A tree of cliques: clique 0 stands alone, clique i >= 1 is glued to an
/// existing vertex of an earlier clique.
struct CliqueTreeSpec {
  std::vector<int> sizes;                      // each >= 2
  std::vector<CliqueAttachment> attachments;   // sizes.size() - 1 entries

  int clique_count() const { return static_cast<int>(sizes.size()); }
  int order() const;
};

/// Vertices are numbered clique by clique: clique 0 takes 0..n0-1, each
/// later clique adds its new vertices in order after the shared one.
Graph realize(const CliqueTreeSpec& spec);

/// Sizes sum to n + s - 1 with every size >= 2 drawn as a uniform
/// composition; each clique attaches to a uniform earlier clique at a
/// uniform vertex. Deterministic per seed on every platform.
Graph random_clique_tree(int n, int s, std::uint64_t seed);
CliqueTreeSpec random_clique_tree_spec(int n, int s, std::uint64_t seed);

// Exhaustive generators: one representative per isomorphism class, in a
// fixed order. Clique trees are grown by gluing a clique onto a
// representative with one fewer clique; trees and connected graphs are
// grown by adding a vertex. Duplicates are rejected with are_isomorphic
// inside buckets of equal invariant_key.
std::vector<Graph> enumerate_clique_trees(int n, int s);
/// All clique trees on n vertices, every block count, ordered by s.
std::vector<Graph> enumerate_clique_trees(int n);
std::vector<Graph> enumerate_trees(int n);
/// Intended for n <= 7; n = 8 works but takes noticeably longer.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Distinct orderings of a multiset, lexicographic.
std::vector<std::vector<int>> distinct_orderings(std::vector<int> sizes);

/// Clique paths over every distinct ordering of `sizes`, dropping orderings
/// whose reversal was already produced.
struct Comparator {
  std::vector<int> ordering;
  Graph graph;
};
std::vector<Comparator> clique_path_comparators(const std::vector<int>& sizes);

/// Clique stars over every distinct (bridge, last) choice from `sizes`;
/// the remaining sizes become the end cliques at w. Needs >= 3 sizes.
/// `ordering` is laid out as {bridge, last, end...}.
std::vector<Comparator> clique_star_comparators(const std::vector<int>& sizes);

/// Family grammar: path:n, complete:n, broom:n, cliquepath:n1,n2,...,
/// cliquestar:e1,e2,...;bridge;last. Throws std::invalid_argument.
Graph parse_family(std::string_view spec);

}  // namespace cliquespec
