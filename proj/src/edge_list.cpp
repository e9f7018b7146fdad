#include "cliquespec/edge_list.hpp"

#include <fstream>
#include <sstream>

namespace cliquespec {

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

// Parses exactly two non-negative integers separated by one space.
bool parse_pair(std::string_view line, long& a, long& b) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto space = line.find(' ');
  if (space == std::string_view::npos || space == 0 || space + 1 >= line.size()) return false;
  auto digits = [](std::string_view s, long& out) {
    if (s.empty() || s.size() > 9) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
    }
    return true;
  };
  return digits(line.substr(0, space), a) && digits(line.substr(space + 1), b);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && (lines.back().empty() || lines.back() == "\r")) lines.pop_back();
  if (lines.empty()) throw GraphError("edge list: empty input");

  long n = 0, m = 0;
  if (!parse_pair(lines[0], n, m)) throw GraphError("edge list line 1: expected header 'n m'");
  if (n < 1) throw GraphError("edge list line 1: vertex count must be at least 1");
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw GraphError("edge list: header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long u = 0, v = 0;
    if (!parse_pair(lines[i], u, v)) {
      throw GraphError("edge list line " + std::to_string(i + 1) + ": expected 'u v'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path);
  out << to_edge_list(g);
}

}  // namespace cliquespec
