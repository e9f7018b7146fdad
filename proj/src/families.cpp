#include "cliquespec/families.hpp"

#include "random_util.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <string>

namespace cliquespec {

using detail::draw_below;

namespace {

void require_size(int k, const char* what) {
  if (k < 2) throw std::invalid_argument(std::string(what) + ": clique size " + std::to_string(k) + " < 2");
}

// Adds a clique on `members` to g.
void add_clique(Graph& g, const std::vector<Vertex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) g.add_edge(members[i], members[j]);
}

}  // namespace

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph broom(int n) {
  if (n < 4) throw std::invalid_argument("broom needs n >= 4, got " + std::to_string(n));
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  for (Vertex v = 3; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph clique_path(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("clique path needs at least one clique");
  int n = 1;
  for (int k : sizes) {
    require_size(k, "clique path");
    n += k - 1;
  }
  Graph g(n);
  Vertex shared = 0;
  Vertex next = 1;
  for (int k : sizes) {
    std::vector<Vertex> members{shared};
    for (int i = 1; i < k; ++i) members.push_back(next++);
    add_clique(g, members);
    shared = members.back();
  }
  return g;
}

Graph clique_star(const std::vector<int>& end_sizes, int bridge_size, int last_size) {
  if (end_sizes.empty()) throw std::invalid_argument("clique star needs at least one end clique at w");
  require_size(bridge_size, "clique star");
  require_size(last_size, "clique star");
  int n = bridge_size + (last_size - 1);
  for (int k : end_sizes) {
    require_size(k, "clique star");
    n += k - 1;
  }
  Graph g(n);
  const Vertex w = 0, w_prime = 1;
  std::vector<Vertex> centre;
  for (Vertex v = 0; v < bridge_size; ++v) centre.push_back(v);
  add_clique(g, centre);
  Vertex next = bridge_size;
  auto glue = [&](Vertex at, int k) {
    std::vector<Vertex> members{at};
    for (int i = 1; i < k; ++i) members.push_back(next++);
    add_clique(g, members);
  };
  for (int k : end_sizes) glue(w, k);
  glue(w_prime, last_size);
  return g;
}

int CliqueTreeSpec::order() const {
  int n = 1;
  for (int k : sizes) n += k - 1;
  return sizes.empty() ? 0 : n;
}

Graph realize(const CliqueTreeSpec& spec) {
  if (spec.sizes.empty()) throw std::invalid_argument("clique tree spec has no cliques");
  if (spec.attachments.size() + 1 != spec.sizes.size()) {
    throw std::invalid_argument("clique tree spec needs one attachment per clique after the first");
  }
  for (int k : spec.sizes) require_size(k, "clique tree spec");

  Graph g(spec.order());
  std::vector<std::vector<Vertex>> members(spec.sizes.size());
  Vertex next = 0;
  for (int i = 0; i < spec.sizes[0]; ++i) members[0].push_back(next++);
  add_clique(g, members[0]);
  for (std::size_t c = 1; c < spec.sizes.size(); ++c) {
    const auto& at = spec.attachments[c - 1];
    if (at.clique < 0 || static_cast<std::size_t>(at.clique) >= c) {
      throw std::invalid_argument("clique " + std::to_string(c) + " attaches to clique " + std::to_string(at.clique) +
                                  " which is not earlier");
    }
    const auto& target = members[at.clique];
    if (std::find(target.begin(), target.end(), at.vertex) == target.end()) {
      throw std::invalid_argument("clique " + std::to_string(c) + " attaches at vertex " + std::to_string(at.vertex) +
                                  " which is not in clique " + std::to_string(at.clique));
    }
    members[c].push_back(at.vertex);
    for (int i = 1; i < spec.sizes[c]; ++i) members[c].push_back(next++);
    add_clique(g, members[c]);
  }
  return g;
}

CliqueTreeSpec random_clique_tree_spec(int n, int s, std::uint64_t seed) {
  if (s < 1 || n < s + 1) {
    throw std::invalid_argument("no clique tree with n=" + std::to_string(n) + " and s=" + std::to_string(s));
  }
  std::mt19937_64 rng(seed);
  // Spread the n - s - 1 surplus vertices over s cliques: a uniform
  // arrangement of surplus stars and s - 1 bars.
  const int surplus = n - s - 1;
  std::vector<char> tokens(surplus, 0);
  tokens.insert(tokens.end(), s - 1, 1);
  for (std::size_t i = tokens.size(); i > 1; --i) std::swap(tokens[i - 1], tokens[draw_below(rng, i)]);

  CliqueTreeSpec spec;
  spec.sizes.assign(s, 2);
  int clique = 0;
  for (char t : tokens) {
    if (t) ++clique;
    else ++spec.sizes[clique];
  }

  std::vector<std::vector<Vertex>> members(s);
  Vertex next = 0;
  for (int i = 0; i < spec.sizes[0]; ++i) members[0].push_back(next++);
  for (int c = 1; c < s; ++c) {
    int target = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(c)));
    Vertex at = members[target][draw_below(rng, members[target].size())];
    spec.attachments.push_back({target, at});
    members[c].push_back(at);
    for (int i = 1; i < spec.sizes[c]; ++i) members[c].push_back(next++);
  }
  return spec;
}

Graph random_clique_tree(int n, int s, std::uint64_t seed) { return realize(random_clique_tree_spec(n, s, seed)); }

std::vector<std::vector<int>> distinct_orderings(std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(sizes);
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  return out;
}

std::vector<Comparator> clique_path_comparators(const std::vector<int>& sizes) {
  std::vector<Comparator> out;
  for (auto& ordering : distinct_orderings(sizes)) {
    std::vector<int> reversed(ordering.rbegin(), ordering.rend());
    if (reversed < ordering) continue;
    Graph g = clique_path(ordering);
    out.push_back({std::move(ordering), std::move(g)});
  }
  return out;
}

std::vector<Comparator> clique_star_comparators(const std::vector<int>& sizes) {
  if (sizes.size() < 3) throw std::invalid_argument("clique star comparators need at least three cliques");
  std::set<std::pair<int, int>> seen;
  std::vector<Comparator> out;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (std::size_t l = 0; l < sizes.size(); ++l) {
      if (b == l || !seen.emplace(sizes[b], sizes[l]).second) continue;
      std::vector<int> ends;
      for (std::size_t i = 0; i < sizes.size(); ++i)
        if (i != b && i != l) ends.push_back(sizes[i]);
      std::sort(ends.begin(), ends.end());
      std::vector<int> ordering{sizes[b], sizes[l]};
      ordering.insert(ordering.end(), ends.begin(), ends.end());
      out.push_back({std::move(ordering), clique_star(ends, sizes[b], sizes[l])});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.ordering < b.ordering; });
  return out;
}

namespace {

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("family '" + std::string(spec) + "': bad integer '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma - pos), spec));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Graph parse_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family '" + std::string(spec) + "': expected name:arguments");
  }
  auto name = spec.substr(0, colon);
  auto args = spec.substr(colon + 1);
  auto positive = [&](int n) {
    if (n < 1) throw std::invalid_argument("family '" + std::string(spec) + "': n must be >= 1");
    return n;
  };
  if (name == "path") return path_graph(positive(parse_int(args, spec)));
  if (name == "complete") return complete_graph(positive(parse_int(args, spec)));
  if (name == "broom") return broom(parse_int(args, spec));
  if (name == "cliquepath") return clique_path(parse_int_list(args, spec));
  if (name == "cliquestar") {
    auto first = args.find(';');
    auto second = first == std::string_view::npos ? first : args.find(';', first + 1);
    if (second == std::string_view::npos || args.find(';', second + 1) != std::string_view::npos) {
      throw std::invalid_argument("family '" + std::string(spec) + "': expected cliquestar:e1,e2,...;bridge;last");
    }
    return clique_star(parse_int_list(args.substr(0, first), spec),
                       parse_int(args.substr(first + 1, second - first - 1), spec),
                       parse_int(args.substr(second + 1), spec));
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

}  // namespace cliquespec
