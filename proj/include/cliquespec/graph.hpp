#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cliquespec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Raised for malformed graph input or violated preconditions on graph
// operations (self-loops, duplicate edges, disconnected input where a
// connected graph is required).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 stored as dense row bitsets.
///
/// Values are immutable once built; every operation that changes structure
/// returns a new Graph.
class Graph {
 public:
  /// Validating constructor: rejects out-of-range endpoints, self-loops
  /// and duplicate edges (in either orientation).
  static Graph from_edge_list(int n, const std::vector<Edge>& edges);

  /// Empty graph on n vertices.
  explicit Graph(int n = 1);

  int order() const { return n_; }
  int size() const;

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

  // Builder-style helpers returning modified copies. They skip validation
  // and are meant for internal constructions that are correct by design.
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  // Mutating access used by constructors in this library.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

 private:
  const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  std::uint64_t* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// All-pairs shortest path lengths. Unreachable pairs hold no value.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n) {}

  int order() const { return n_; }
  std::optional<int> at(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  bool finite(Vertex u, Vertex v) const { return d_[index(u, v)].has_value(); }
  void set(Vertex u, Vertex v, int d) { d_[index(u, v)] = d; }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<std::optional<int>> d_;
};

struct BlockDecomposition {
  // Each block is a sorted vertex list; blocks are sorted lexicographically.
  std::vector<std::vector<Vertex>> blocks;
  // Sorted ascending.
  std::vector<Vertex> cut_vertices;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_cut_vertex(Vertex v) const;
  // Sorted ascending.
  std::vector<int> block_sizes() const;
};

Graph complement(const Graph& g);
DistanceMatrix bfs_distances(const Graph& g);

/// Largest finite distance, or nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);
bool is_connected(const Graph& g);

/// Blocks and cut vertices via the DFS lowpoint method.
/// Throws GraphError for disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

bool is_clique_tree(const Graph& g);

/// True iff the connected graph g has two cut vertices that lie in no
/// common block. On clique trees this is "two nonadjacent cut vertices".
bool has_separated_cut_vertices(const Graph& g);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

// isomorphism.cpp

/// Label-independent colour-refinement hash per vertex, after `rounds`
/// rounds (defaults to n). Equal graphs up to relabeling get equal
/// multisets of colours.
std::vector<std::uint64_t> refinement_colors(const Graph& g, int rounds = -1);

/// Isomorphism invariant combining order, size and the sorted refined colours.
std::vector<std::uint64_t> invariant_key(const Graph& g);

/// Colour refinement followed by backtracking search. Intended for n <= 12.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Returns a mapping g-vertex -> h-vertex if the graphs are isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace cliquespec
