#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gvd/generators.hpp"
#include "gvd/graph.hpp"
#include "gvd/treedecomp.hpp"

using namespace gvd;

namespace {

Graph path_graph(int n) {
  Graph g;
  g.n = n;
  for (int v = 1; v < n; ++v) g.edges.push_back({v, v + 1});
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.edges.insert(g.edges.begin(), {1, n});
  normalize_edges(g);
  return g;
}

std::vector<int> flat_union(const std::vector<std::vector<int>>& bags) {
  std::set<int> s;
  for (const auto& b : bags) s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("td serialization round-trips") {
  Graph g = cycle_graph(4);
  TreeDecomposition td;
  td.n_graph = 4;
  td.bags = {{1, 2, 4}, {2, 3, 4}};
  td.tree_edges = {{0, 1}};
  REQUIRE(validate_td(td, g).empty());
  CHECK(td.width() == 2);

  std::string text = write_td(td);
  TreeDecomposition back = parse_td(text, g);
  CHECK(back.n_graph == td.n_graph);
  CHECK(back.bags == td.bags);
  CHECK(back.tree_edges == td.tree_edges);
}

TEST_CASE("td parsing rejects malformed input") {
  Graph g = path_graph(3);
  CHECK_THROWS(parse_td("", g));
  CHECK_THROWS(parse_td("b 1 1 2\ns td 1 2 3\n", g));           // bag first
  CHECK_THROWS(parse_td("s td 2 2 3\nb 1 1 2\nb 1 2 3\n1 2\n", g));  // dup id
  CHECK_THROWS(parse_td("s td 1 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", g));  // count
}

TEST_CASE("td validation reports each axiom violation") {
  Graph g = cycle_graph(4);

  SUBCASE("vertex coverage") {
    TreeDecomposition td{4, {{1, 2}, {2, 3}}, {{0, 1}}};
    CHECK_FALSE(validate_td(td, g).empty());
  }
  SUBCASE("edge coverage") {
    TreeDecomposition td{4, {{1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}}};
    // edge {1,4} of the cycle is in no bag
    CHECK_FALSE(validate_td(td, g).empty());
  }
  SUBCASE("occurrence connectivity") {
    TreeDecomposition td{4, {{1, 2, 4}, {2, 3}, {3, 4, 1}}, {{0, 1}, {1, 2}}};
    // vertex 1 occurs in bags 0 and 2 but not the middle bag
    CHECK_FALSE(validate_td(td, g).empty());
  }
  SUBCASE("tree shape") {
    TreeDecomposition td{4, {{1, 2, 3, 4}, {1, 2, 3, 4}}, {}};
    CHECK_FALSE(validate_td(td, g).empty());
  }
  SUBCASE("bags must be sorted and unique") {
    TreeDecomposition td{4, {{2, 1, 3, 4}}, {}};
    CHECK_FALSE(validate_td(td, g).empty());
    TreeDecomposition td2{4, {{1, 1, 2, 3, 4}}, {}};
    CHECK_FALSE(validate_td(td2, g).empty());
  }
  SUBCASE("the hand decomposition itself is fine") {
    TreeDecomposition td{4, {{1, 2, 4}, {2, 3, 4}}, {{0, 1}}};
    CHECK(validate_td(td, g).empty());
  }
}

TEST_CASE("min-fill widths on known families") {
  auto width_of = [](const Graph& g) {
    TreeDecomposition td = heuristic_td(g);
    REQUIRE(validate_td(td, g).empty());
    return td.width();
  };
  CHECK(width_of(path_graph(2)) == 1);
  CHECK(width_of(path_graph(7)) == 1);
  CHECK(width_of(cycle_graph(6)) == 2);
  CHECK(width_of(complete(5)) == 4);
  CHECK(width_of(complete_bipartite(2, 3)) == 2);
  CHECK(width_of(grid(3, 3)) == 3);

  Graph single;
  single.n = 1;
  CHECK(width_of(single) == 0);

  Graph isolated;
  isolated.n = 3;
  isolated.edges = {{1, 2}};
  CHECK(width_of(isolated) == 1);
}

TEST_CASE("nicification of a decomposition keeps width and structure") {
  for (const Graph& g : {cycle_graph(5), complete(4), grid(2, 3), wall(2)}) {
    TreeDecomposition td = heuristic_td(g);
    NiceDecomposition nice = make_nice_td(td, g);
    CHECK(validate_nice(nice, g).empty());
    CHECK(nice.width() == td.width());
    REQUIRE(nice.root >= 0);
    CHECK(nice.nodes[nice.root].bag.empty());
    CHECK(nice.nodes[nice.root].parent == -1);

    for (size_t i = 0; i < nice.nodes.size(); ++i) {
      const DecompNode& nd = nice.nodes[i];
      switch (nd.type) {
        case NodeType::leaf:
          CHECK(nd.children.empty());
          break;
        case NodeType::introduce: {
          REQUIRE(nd.children.size() == 1);
          const auto& child = nice.nodes[nd.children[0]].bag;
          CHECK(nd.bag.size() == child.size() + 1);
          CHECK(std::binary_search(nd.bag.begin(), nd.bag.end(), nd.vertex));
          break;
        }
        case NodeType::forget: {
          REQUIRE(nd.children.size() == 1);
          const auto& child = nice.nodes[nd.children[0]].bag;
          CHECK(nd.bag.size() + 1 == child.size());
          CHECK(std::binary_search(child.begin(), child.end(), nd.vertex));
          break;
        }
        case NodeType::join: {
          REQUIRE(nd.children.size() == 2);
          CHECK(nice.nodes[nd.children[0]].bag == nd.bag);
          CHECK(nice.nodes[nd.children[1]].bag == nd.bag);
          break;
        }
        case NodeType::edge_leaf:
          FAIL("edge leaves do not belong in an unrefined decomposition");
          break;
      }
    }

    std::vector<std::vector<int>> bags;
    for (const auto& nd : nice.nodes) bags.push_back(nd.bag);
    std::vector<int> everything = flat_union(bags);
    for (int v = 1; v <= g.n; ++v)
      CHECK(std::binary_search(everything.begin(), everything.end(), v));
  }
}

TEST_CASE("refinement settles every edge exactly once") {
  for (const Graph& g : {cycle_graph(5), complete(4), grid(2, 3), wall(2),
                         b_ell(1)}) {
    TreeDecomposition td = heuristic_td(g);
    RefinedDecomposition rd = refine(make_nice_td(td, g), g);
    CHECK(validate_refined(rd, g).empty());
    CHECK(rd.label_capacity == td.width() + 1);

    std::multiset<std::pair<int, int>> settled;
    for (const auto& nd : rd.nodes)
      if (nd.type == NodeType::edge_leaf) settled.insert(nd.edge);
    std::multiset<std::pair<int, int>> expected(g.edges.begin(), g.edges.end());
    CHECK(settled == expected);

    // lambda is injective on every bag and in range
    for (const auto& nd : rd.nodes) {
      std::set<int> seen;
      for (int v : nd.bag) {
        int l = rd.lambda[v];
        CHECK(l >= 1);
        CHECK(l <= rd.label_capacity);
        CHECK(seen.insert(l).second);
      }
    }
  }
}

TEST_CASE("refinement validation notices a forged edge leaf") {
  Graph g = cycle_graph(4);
  RefinedDecomposition rd = refine(make_nice_td(heuristic_td(g), g), g);
  REQUIRE(validate_refined(rd, g).empty());
  for (auto& nd : rd.nodes)
    if (nd.type == NodeType::edge_leaf) {
      nd.edge = {1, 3};  // not an edge of the cycle
      break;
    }
  CHECK_FALSE(validate_refined(rd, g).empty());
}

TEST_CASE("disconnected graphs still decompose") {
  Graph g;
  g.n = 6;
  g.edges = {{1, 2}, {2, 3}, {4, 5}, {5, 6}};
  TreeDecomposition td = heuristic_td(g);
  CHECK(validate_td(td, g).empty());
  NiceDecomposition nice = make_nice_td(td, g);
  CHECK(validate_nice(nice, g).empty());
  RefinedDecomposition rd = refine(nice, g);
  CHECK(validate_refined(rd, g).empty());
}
