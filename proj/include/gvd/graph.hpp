// Simple undirected graphs with 1-based vertices, in PACE .gr format.

#ifndef GVD_GRAPH_HPP
#define GVD_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gvd {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (min, max), sorted, unique

  int m() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;  // index 0 unused
  bool connected() const;
};

void normalize_edges(Graph& g);  // orient, sort, reject loops and duplicates

// "p tw <n> <m>" header, one "u v" line per edge, "c" comment lines
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

Graph induced_subgraph_without(const Graph& g, const std::vector<int>& removed);

std::uint64_t graph_hash(const Graph& g);

}  // namespace gvd

#endif
