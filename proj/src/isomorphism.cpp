#include <algorithm>
#include <map>

#include "cliquespec/graph.hpp"

namespace cliquespec {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<std::uint64_t> refinement_colors(const Graph& g, int rounds) {
  const int n = g.order();
  if (rounds < 0) rounds = n;
  std::vector<std::uint64_t> color(n), next(n), nbr;
  for (Vertex v = 0; v < n; ++v) color[v] = mix(static_cast<std::uint64_t>(g.degree(v)));
  for (int r = 0; r < rounds; ++r) {
    for (Vertex v = 0; v < n; ++v) {
      nbr.clear();
      for (Vertex u = 0; u < n; ++u)
        if (g.adjacent(u, v)) nbr.push_back(color[u]);
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = mix(color[v]);
      for (auto c : nbr) h = mix(h ^ c);
      next[v] = h;
    }
    color.swap(next);
  }
  return color;
}

std::vector<std::uint64_t> invariant_key(const Graph& g) {
  auto colors = refinement_colors(g);
  std::sort(colors.begin(), colors.end());
  std::vector<std::uint64_t> key{static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(g.size())};
  key.insert(key.end(), colors.begin(), colors.end());
  return key;
}

namespace {

struct Matcher {
  const Graph& g;
  const Graph& h;
  const std::vector<std::uint64_t>& gc;
  const std::vector<std::uint64_t>& hc;
  std::vector<Vertex> order;
  std::vector<Vertex> map;   // g -> h
  std::vector<char> used;    // h vertices taken

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex u = order[depth];
    for (Vertex cand = 0; cand < h.order(); ++cand) {
      if (used[cand] || hc[cand] != gc[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex w = order[k];
        ok = g.adjacent(u, w) == h.adjacent(cand, map[w]);
      }
      if (!ok) continue;
      map[u] = cand;
      used[cand] = 1;
      if (extend(depth + 1)) return true;
      used[cand] = 0;
    }
    map[u] = -1;
    return false;
  }
};

// Search order: rarest colour class first, then greedily the vertex with
// the most already-placed neighbours so adjacency constraints bite early.
std::vector<Vertex> search_order(const Graph& g, const std::vector<std::uint64_t>& colors) {
  const int n = g.order();
  std::map<std::uint64_t, int> class_size;
  for (auto c : colors) ++class_size[c];
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<int> placed_nbrs(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && class_size[colors[v]] < class_size[colors[best]])) {
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(best, v)) ++placed_nbrs[v];
  }
  return order;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  const auto gc = refinement_colors(g);
  const auto hc = refinement_colors(h);
  auto gs = gc, hs = hc;
  std::sort(gs.begin(), gs.end());
  std::sort(hs.begin(), hs.end());
  if (gs != hs) return std::nullopt;

  Matcher m{g, h, gc, hc, search_order(g, gc), std::vector<Vertex>(g.order(), -1),
            std::vector<char>(h.order(), 0)};
  if (!m.extend(0)) return std::nullopt;
  return m.map;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace cliquespec
