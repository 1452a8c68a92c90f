#include <optional>
#include <stdexcept>

#include "doctest.h"
#include "gvd/generators.hpp"
#include "gvd/graph.hpp"
#include "gvd/oracle.hpp"

using namespace gvd;

namespace {

Graph petersen() {
  Graph g;
  g.n = 10;
  g.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
             {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
             {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}};
  normalize_edges(g);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g;
  g.n = a.n + b.n;
  g.edges = a.edges;
  for (auto [u, v] : b.edges) g.edges.push_back({u + a.n, v + a.n});
  normalize_edges(g);
  return g;
}

}  // namespace

TEST_CASE("trees and cycles are planar") {
  Graph path;
  path.n = 5;
  path.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(exact_genus(path) == 0);

  Graph cyc;
  cyc.n = 5;
  cyc.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  CHECK(exact_genus(cyc) == 0);

  Graph empty;
  empty.n = 3;
  CHECK(exact_genus(empty) == 0);
}

TEST_CASE("named genus values") {
  OracleOptions fast;
  fast.threads = 4;
  CHECK(exact_genus(complete(4), fast) == 0);
  CHECK(exact_genus(complete(5), fast) == 1);
  CHECK(exact_genus(complete_bipartite(3, 3), fast) == 1);

  OracleOptions ori = fast;
  ori.orientable_only = true;
  CHECK(exact_genus(complete(5), ori) == 2);
  CHECK(exact_genus(complete_bipartite(3, 3), ori) == 2);
}

TEST_CASE("petersen graph has euler genus 1") {
  OracleOptions fast;
  fast.threads = 4;
  CHECK(exact_genus(petersen(), fast) == 1);
}

TEST_CASE("planar generated families stay planar") {
  OracleOptions fast;
  fast.threads = 4;
  CHECK(exact_genus(grid(2, 3), fast) == 0);
  CHECK(exact_genus(wall(2), fast) == 0);
}

TEST_CASE("genus adds over components") {
  OracleOptions fast;
  fast.threads = 4;
  CHECK(exact_genus(disjoint_union(complete(5), complete(4)), fast) == 1);
  CHECK(exact_genus(disjoint_union(complete(5), complete_bipartite(3, 3)),
                    fast) == 2);
}

TEST_CASE("signature reduction does not change the minimum") {
  OracleOptions full;
  full.threads = 4;
  full.reduce_signatures = false;
  CHECK(exact_genus(complete_bipartite(3, 3), full) == 1);
  CHECK(exact_genus(complete(4), full) == 0);
}

TEST_CASE("scheme enumeration size guard") {
  OracleOptions tiny;
  tiny.max_schemes = 10;
  CHECK_THROWS_AS(exact_genus(complete(5), tiny), std::runtime_error);
}

TEST_CASE("thread count does not change the answer") {
  OracleOptions one, four;
  four.threads = 4;
  CHECK(exact_genus(complete(5), one) == exact_genus(complete(5), four));
  CHECK(exact_genus(petersen(), four) == 1);
}

TEST_CASE("hand scheme to embedding") {
  Graph edge;
  edge.n = 2;
  edge.edges = {{1, 2}};
  EmbeddingScheme s;
  s.rotations = {{}, {0}, {1}};
  s.signature = {1};
  Embedding e = scheme_to_embedding(edge, s);
  REQUIRE(e.valid_graph());
  CHECK(e.flag_count == 4);
  CHECK(count_vertices(e) == 2);
  CHECK(count_faces(e) == 1);
  CHECK(euler_genus(e) == 0);

  s.signature = {-1};
  Embedding twisted = scheme_to_embedding(edge, s);
  REQUIRE(twisted.valid_graph());
  CHECK(euler_genus(twisted) == 0);

  s.signature = {1, 1};
  CHECK_THROWS_AS(scheme_to_embedding(edge, s), std::invalid_argument);
}

TEST_CASE("deletion search on small graphs") {
  CHECK(brute_force_gvd(complete(4), 0, 0) == 0);
  CHECK(brute_force_gvd(complete(5), 0, 0) == std::nullopt);
  CHECK(brute_force_gvd(complete(5), 0, 1) == 1);
  CHECK(brute_force_gvd(complete(5), 0, 2) == 1);
  CHECK(brute_force_gvd(complete(5), 1, 0) == 0);
  CHECK(brute_force_gvd(complete_bipartite(3, 3), 0, 1) == 1);
  CHECK(brute_force_gvd(complete_bipartite(3, 3), 0, 0) == std::nullopt);

  OracleOptions ori;
  ori.orientable_only = true;
  CHECK(brute_force_gvd(complete(5), 1, 0, ori) == std::nullopt);
  CHECK(brute_force_gvd(complete(5), 2, 0, ori) == 0);
}

TEST_CASE("deletion search honors the budget exactly") {
  // two disjoint K5 need two deletions to become planar
  Graph two;
  two.n = 10;
  two.edges = complete(5).edges;
  for (auto [u, v] : complete(5).edges) two.edges.push_back({u + 5, v + 5});
  normalize_edges(two);
  CHECK(brute_force_gvd(two, 0, 1) == std::nullopt);
  CHECK(brute_force_gvd(two, 0, 2) == 2);
  CHECK(brute_force_gvd(two, 1, 1) == 1);
  CHECK(brute_force_gvd(two, 2, 0) == 0);
}
