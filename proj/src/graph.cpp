#include "cliquespec/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace cliquespec {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw GraphError("graph must have at least one vertex, got n=" + std::to_string(n));
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.add_edge(u, v);
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockDecomposition::block_sizes() const {
  std::vector<int> sizes;
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

std::vector<int> bfs_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] < 0 && g.adjacent(u, v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceMatrix bfs_distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    auto row = bfs_from(g, u);
    for (Vertex v = 0; v < g.order(); ++v)
      if (row[v] >= 0) d.set(u, v, row[v]);
  }
  return d;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (int d : bfs_from(g, u)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

struct LowpointSearch {
  const Graph& g;
  std::vector<int> discovery;
  std::vector<int> low;
  std::vector<Edge> edge_stack;
  std::vector<char> is_cut;
  std::vector<std::vector<Vertex>> blocks;
  int clock = 0;

  explicit LowpointSearch(const Graph& graph)
      : g(graph), discovery(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), 0) {}

  void pop_block(const Edge& until) {
    std::vector<Vertex> block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    blocks.push_back(std::move(block));
  }

  void visit(Vertex u, Vertex parent) {
    discovery[u] = low[u] = clock++;
    int children = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      if (discovery[v] < 0) {
        ++children;
        edge_stack.emplace_back(u, v);
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= discovery[u]) {
          if (parent >= 0 || children > 1) is_cut[u] = 1;
          pop_block({u, v});
        }
      } else if (v != parent && discovery[v] < discovery[u]) {
        low[u] = std::min(low[u], discovery[v]);
        edge_stack.emplace_back(u, v);
      }
    }
    // The root is a cut vertex iff it has two or more DFS children.
    if (parent < 0 && children < 2) is_cut[u] = 0;
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw GraphError("block decomposition requires a connected graph");
  LowpointSearch search(g);
  search.visit(0, -1);

  BlockDecomposition out;
  out.blocks = std::move(search.blocks);
  // K1 comes out with no blocks: every block here has at least one edge.
  std::sort(out.blocks.begin(), out.blocks.end());
  for (Vertex v = 0; v < g.order(); ++v)
    if (search.is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_clique_tree(const Graph& g) {
  if (!is_connected(g)) return false;
  auto bd = block_decomposition(g);
  return std::all_of(bd.blocks.begin(), bd.blocks.end(), [&](const auto& b) { return is_clique(g, b); });
}

bool has_separated_cut_vertices(const Graph& g) {
  auto bd = block_decomposition(g);
  const auto& cuts = bd.cut_vertices;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      bool shared = std::any_of(bd.blocks.begin(), bd.blocks.end(), [&](const auto& b) {
        return std::binary_search(b.begin(), b.end(), cuts[i]) && std::binary_search(b.begin(), b.end(), cuts[j]);
      });
      if (!shared) return true;
    }
  }
  return false;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

}  // namespace cliquespec
