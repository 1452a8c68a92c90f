#include "gvd/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gvd {

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj = adjacency();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

void normalize_edges(Graph& g) {
  for (auto& [u, v] : g.edges) {
    if (u < 1 || u > g.n || v < 1 || v > g.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    throw std::invalid_argument("parallel edges are not allowed");
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Graph g;
  bool have_header = false;
  long declared_m = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, tw;
      if (!(ls >> p >> tw >> g.n >> declared_m) || tw != "tw")
        throw std::invalid_argument("bad problem line, expected 'p tw <n> <m>'");
      if (g.n < 0 || declared_m < 0)
        throw std::invalid_argument("negative size in problem line");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw std::invalid_argument("edge line before the problem line");
    int u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line");
    g.edges.emplace_back(u, v);
  }
  if (!have_header) throw std::invalid_argument("missing problem line");
  if (static_cast<long>(g.edges.size()) != declared_m)
    throw std::invalid_argument("edge count does not match the problem line");
  normalize_edges(g);
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph induced_subgraph_without(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.n + 1, 0);
  for (int v : removed) {
    if (v < 1 || v > g.n)
      throw std::invalid_argument("removed vertex out of range");
    gone[v] = 1;
  }
  // keep original vertex ids so decompositions stay aligned
  Graph out;
  out.n = g.n;
  for (auto [u, v] : g.edges)
    if (!gone[u] && !gone[v]) out.edges.emplace_back(u, v);
  return out;
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(g.n));
  for (auto [u, v] : g.edges) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

}  // namespace gvd
