#include <map>
#include <string>

#include "cliquespec/families.hpp"

namespace cliquespec {

namespace {

// Keeps one representative per isomorphism class, in insertion order.
class IsoClassSet {
 public:
  bool insert(Graph g) {
    auto& bucket = buckets_[invariant_key(g)];
    for (std::size_t idx : bucket)
      if (are_isomorphic(reps_[idx], g)) return false;
    bucket.push_back(reps_.size());
    reps_.push_back(std::move(g));
    return true;
  }

  std::vector<Graph> take() && { return std::move(reps_); }

 private:
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets_;
  std::vector<Graph> reps_;
};

// Copy of g with one extra vertex n joined to `neighbors`.
Graph extend(const Graph& g, const std::vector<Vertex>& neighbors) {
  Graph out(g.order() + 1);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (Vertex u : neighbors) out.add_edge(u, g.order());
  return out;
}

// Copy of g with a clique of size k glued at vertex `at`.
Graph glue_clique(const Graph& g, Vertex at, int k) {
  const int n = g.order();
  Graph out(n + k - 1);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  std::vector<Vertex> members{at};
  for (int i = 0; i < k - 1; ++i) members.push_back(n + i);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) out.add_edge(members[i], members[j]);
  return out;
}

void check_order(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw std::invalid_argument(std::string(what) + ": n must be in [1, " + std::to_string(limit) + "], got " +
                                std::to_string(n));
  }
}

using CliqueTreeCache = std::map<std::pair<int, int>, std::vector<Graph>>;

const std::vector<Graph>& clique_trees_cached(int n, int s, CliqueTreeCache& cache) {
  if (auto it = cache.find({n, s}); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 1) {
    if (s == 0) out.emplace_back(1);
  } else if (s == 1) {
    out.push_back(complete_graph(n));
  } else if (s >= 2 && s <= n - 1) {
    // Every clique tree with s >= 2 cliques has an end clique; deleting its
    // private vertices leaves a clique tree with s - 1 cliques.
    IsoClassSet classes;
    for (int k = 2; n - k + 1 >= s; ++k) {
      for (const Graph& base : clique_trees_cached(n - k + 1, s - 1, cache)) {
        for (Vertex at = 0; at < base.order(); ++at) classes.insert(glue_clique(base, at, k));
      }
    }
    out = std::move(classes).take();
  }
  return cache.emplace(std::make_pair(n, s), std::move(out)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_clique_trees(int n, int s) {
  check_order(n, 12, "enumerate_clique_trees");
  CliqueTreeCache cache;
  return clique_trees_cached(n, s, cache);
}

std::vector<Graph> enumerate_clique_trees(int n) {
  check_order(n, 12, "enumerate_clique_trees");
  std::vector<Graph> out;
  for (int s = (n == 1 ? 0 : 1); s <= std::max(0, n - 1); ++s) {
    auto batch = enumerate_clique_trees(n, s);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  check_order(n, 12, "enumerate_trees");
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    IsoClassSet classes;
    for (const Graph& t : level)
      for (Vertex v = 0; v < t.order(); ++v) classes.insert(extend(t, {v}));
    level = std::move(classes).take();
  }
  return level;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  check_order(n, 8, "enumerate_connected_graphs");
  // Every connected graph has a vertex whose removal keeps it connected,
  // so growing connected graphs by one vertex reaches every class.
  std::vector<Graph> level{Graph(1)};
  for (int order = 2; order <= n; ++order) {
    IsoClassSet classes;
    const int prev = order - 1;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 1; mask < (1u << prev); ++mask) {
        std::vector<Vertex> nbrs;
        for (Vertex v = 0; v < prev; ++v)
          if (mask >> v & 1u) nbrs.push_back(v);
        classes.insert(extend(g, nbrs));
      }
    }
    level = std::move(classes).take();
  }
  return level;
}

}  // namespace cliquespec
