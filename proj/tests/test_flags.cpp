#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gvd/flags.hpp"
#include "test_support.hpp"

using namespace gvd;
using gvd_test::random_embedding;
using gvd_test::ref_orbit_count;
using gvd_test::ref_orientable;

namespace {

Embedding sphere_loop() {
  Embedding e;
  e.flag_count = 4;
  e.theta = Involution::from_pairs(4, {{0, 1}, {2, 3}});
  e.sigma = Involution::from_pairs(4, {{0, 3}, {1, 2}});
  e.phi = Involution::from_pairs(4, {{0, 1}, {2, 3}});
  return e;
}

Embedding projective_loop() {
  Embedding e;
  e.flag_count = 4;
  e.theta = Involution::from_pairs(4, {{0, 1}, {2, 3}});
  e.sigma = Involution::from_pairs(4, {{0, 3}, {1, 2}});
  e.phi = Involution::from_pairs(4, {{0, 2}, {1, 3}});
  return e;
}

}  // namespace

TEST_CASE("involution from_pairs validates its input") {
  Involution inv = Involution::from_pairs(4, {{0, 2}, {3, 1}});
  CHECK(inv.valid());
  CHECK(inv(0) == 2);
  CHECK(inv(2) == 0);
  CHECK(inv(1) == 3);
  CHECK(inv.pairs() == std::vector<std::pair<Flag, Flag>>{{0, 2}, {1, 3}});

  CHECK_THROWS_AS(Involution::from_pairs(4, {{0, 0}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Involution::from_pairs(4, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Involution::from_pairs(4, {{0, 1}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Involution::from_pairs(4, {{0, 1}, {2, 5}}),
                  std::invalid_argument);
}

TEST_CASE("loop on the sphere") {
  Embedding e = sphere_loop();
  REQUIRE(e.valid_graph());
  CHECK(count_vertices(e) == 1);
  CHECK(count_edges(e) == 1);
  CHECK(count_faces(e) == 2);
  CHECK(count_components(e) == 1);
  CHECK(euler_genus(e) == 0);
  CHECK(hypergraph_genus(e) == 0);
  CHECK(check_orientable(e));
  CHECK(ref_orientable(e));
}

TEST_CASE("loop on the projective plane") {
  Embedding e = projective_loop();
  REQUIRE(e.valid_graph());
  CHECK(count_vertices(e) == 1);
  CHECK(count_edges(e) == 1);
  CHECK(count_faces(e) == 1);
  CHECK(count_components(e) == 1);
  CHECK(euler_genus(e) == 1);
  CHECK(hypergraph_genus(e) == 1);
  CHECK_FALSE(check_orientable(e));
  CHECK_FALSE(ref_orientable(e));
}

TEST_CASE("valid_graph rejects non-edge theta/sigma interaction") {
  Embedding e = sphere_loop();
  // theta == sigma makes <theta, sigma> orbits have 2 flags, not 4
  e.sigma = e.theta;
  CHECK(e.valid_hypergraph());
  CHECK_FALSE(e.valid_graph());
}

TEST_CASE("edge_flags lists the edge quarter flags") {
  Embedding e = projective_loop();
  auto q = e.edge_flags(0);
  CHECK(q == std::array<Flag, 4>{0, 3, 1, 2});
}

TEST_CASE("alternating orbit walks visit each orbit flag exactly once") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    Embedding e = random_embedding(1 + static_cast<int>(rng() % 6), rng);
    REQUIRE(e.valid_graph());
    for (ObjectKind kind :
         {ObjectKind::vertex, ObjectKind::edge, ObjectKind::face}) {
      OrbitFamily fam = kind == ObjectKind::vertex ? vertex_orbits(e)
                        : kind == ObjectKind::edge ? edge_orbits(e)
                                                   : face_orbits(e);
      for (const auto& orbit : fam.orbits) {
        std::vector<Flag> walk = directed_object_orbit(e, kind, orbit.front());
        std::vector<Flag> sorted = walk;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == orbit);
      }
    }
  }
}

TEST_CASE("orbit counts match a union-find reference") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 100; ++it) {
    Embedding e = random_embedding(1 + static_cast<int>(rng() % 8), rng);
    CHECK(count_vertices(e) ==
          ref_orbit_count({&e.sigma, &e.phi}, e.flag_count));
    CHECK(count_edges(e) == ref_orbit_count({&e.theta, &e.sigma}, e.flag_count));
    CHECK(count_faces(e) == ref_orbit_count({&e.theta, &e.phi}, e.flag_count));
    CHECK(count_components(e) ==
          ref_orbit_count({&e.theta, &e.sigma, &e.phi}, e.flag_count));
    CHECK(count_edges(e) * 4 == e.flag_count);
  }
}

TEST_CASE("euler genus is nonnegative and agrees with the hypergraph form") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    Embedding e = random_embedding(1 + static_cast<int>(rng() % 7), rng);
    int g = euler_genus(e);
    CHECK(g >= 0);
    CHECK(g == hypergraph_genus(e));
  }
}

TEST_CASE("orientability matches the bipartite double-cover reference") {
  std::mt19937_64 rng(14);
  int seen_orientable = 0, seen_not = 0;
  for (int it = 0; it < 200; ++it) {
    Embedding e = random_embedding(1 + static_cast<int>(rng() % 6), rng);
    bool expected = ref_orientable(e);
    CHECK(check_orientable(e) == expected);
    (expected ? seen_orientable : seen_not)++;
  }
  CHECK(seen_orientable > 0);
  CHECK(seen_not > 0);
}

TEST_CASE("cycles are canonical up to rotation and reversal") {
  Cycle a = Cycle::from_sequence({3, 1, 4, 5});
  Cycle b = Cycle::from_sequence({4, 5, 3, 1});   // rotation
  Cycle c = Cycle::from_sequence({5, 4, 1, 3});   // reversal
  Cycle d = Cycle::from_sequence({1, 4, 5, 3});
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a == d);
  CHECK(a.canonical().front() ==
        *std::min_element(a.canonical().begin(), a.canonical().end()));
  CHECK(a.size() == 4);
  CHECK(a.contains(4));
  CHECK_FALSE(a.contains(2));

  Cycle different = Cycle::from_sequence({3, 4, 1, 5});
  CHECK(different != a);
}

TEST_CASE("short cycles are the identity") {
  CHECK(Cycle::from_sequence({}).is_identity());
  CHECK(Cycle::from_sequence({7}).is_identity());
  CHECK(Cycle::from_sequence({}) == Cycle::from_sequence({4}));
  CHECK_FALSE(Cycle::from_sequence({1, 2}).is_identity());
}

TEST_CASE("restrict_cycle keeps induced cyclic order") {
  Cycle c = Cycle::from_sequence({0, 5, 2, 7, 4, 9});
  CHECK(restrict_cycle(c, {5, 7, 9}) == Cycle::from_sequence({5, 7, 9}));
  CHECK(restrict_cycle(c, {0, 4, 2}) == Cycle::from_sequence({0, 2, 4}));
  CHECK(restrict_cycle(c, {5}).is_identity());
  CHECK(restrict_cycle(c, {}).is_identity());
}

TEST_CASE("embedding serialization round-trips") {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 30; ++it) {
    Embedding e = random_embedding(1 + static_cast<int>(rng() % 6), rng);
    CHECK(parse_embedding(write_embedding(e)) == e);
  }
  Embedding empty;
  CHECK(parse_embedding(write_embedding(empty)) == empty);
}

TEST_CASE("malformed embedding text is rejected") {
  CHECK_THROWS(parse_embedding("not a number"));
  CHECK_THROWS(parse_embedding("4\n0 1 2 3\n0 3 1 2\n"));       // missing phi
  CHECK_THROWS(parse_embedding("4\n0 0 2 3\n0 3 1 2\n0 1 2 3")); // fixed point
}

TEST_CASE("genus is additive over disjoint components") {
  // projective loop on flags 0..3 plus sphere loop on flags 4..7
  Embedding e;
  e.flag_count = 8;
  e.theta = Involution::from_pairs(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  e.sigma = Involution::from_pairs(8, {{0, 3}, {1, 2}, {4, 7}, {5, 6}});
  e.phi = Involution::from_pairs(8, {{0, 2}, {1, 3}, {4, 5}, {6, 7}});
  REQUIRE(e.valid_graph());
  CHECK(count_components(e) == 2);
  CHECK(euler_genus(e) == 1);
  CHECK_FALSE(check_orientable(e));
}
