#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gvd/boundaried.hpp"
#include "gvd/nicify.hpp"
#include "test_support.hpp"

using namespace gvd;
using gvd_test::random_boundaried;

namespace {

BoundariedEmbedding empty_b(int capacity) {
  return BoundariedEmbedding{{}, capacity, {}};
}

BoundariedEmbedding sphere_loop_b(int capacity) {
  return draw_edge_b(empty_b(capacity), {Anchor::top(), Anchor::bottom()});
}

BoundariedEmbedding projective_loop_b(int capacity) {
  return draw_edge_b(empty_b(capacity), {Anchor::top_prime(), Anchor::bottom()});
}

// relabel flags by permutation p: generator'(f) = p(generator(p^-1(f)))
BoundariedEmbedding permuted(const BoundariedEmbedding& be,
                             const std::vector<Flag>& p) {
  BoundariedEmbedding out;
  out.capacity = be.capacity;
  out.embedding.flag_count = be.embedding.flag_count;
  auto push = [&](const Involution& inv) {
    std::vector<Flag> table(be.embedding.flag_count);
    for (Flag f = 0; f < be.embedding.flag_count; ++f)
      table[p[f]] = p[inv(f)];
    return Involution(std::move(table));
  };
  out.embedding.theta = push(be.embedding.theta);
  out.embedding.sigma = push(be.embedding.sigma);
  out.embedding.phi = push(be.embedding.phi);
  OrbitFamily verts = vertex_orbits(out.embedding);
  for (const auto& [least, label] : be.labels)
    out.labels[verts.orbit_containing(p[least]).front()] = label;
  return out;
}

}  // namespace

TEST_CASE("niceness of the two loops") {
  NiceViolation v;
  CHECK_FALSE(is_nice(sphere_loop_b(2), &v));
  CHECK(v.kind == NiceViolation::Kind::edge_face);
  CHECK(v.edge >= 0);
  CHECK(v.face >= 0);

  CHECK(is_nice(projective_loop_b(2)));
  CHECK(is_nice(empty_b(0)));
  CHECK(is_nice(empty_b(4)));
}

TEST_CASE("a bare edge violates the small-vertex rule") {
  BoundariedEmbedding edge =
      draw_edge_b(empty_b(2), {Anchor::bottom(), Anchor::bottom()});
  NiceViolation v;
  CHECK_FALSE(is_nice(edge, &v));
  CHECK(v.kind == NiceViolation::Kind::small_vertex);
  CHECK(v.vertex >= 0);

  // the same edge with labelled endpoints has one face and no small
  // unlabelled vertices, hence is nice
  BoundariedEmbedding labelled = draw_edge_b(
      empty_b(2), {Anchor::bottom_labelled(1), Anchor::bottom_labelled(2)});
  CHECK(is_nice(labelled));
  CHECK(make_nice(labelled) == labelled);
}

TEST_CASE("make_nice empties the unlabelled sphere loop") {
  BoundariedEmbedding nice = make_nice(sphere_loop_b(3));
  CHECK(is_nice(nice));
  CHECK(nice.embedding.flag_count == 0);
  CHECK(euler_genus(nice.embedding) == 0);
}

TEST_CASE("make_nice keeps the projective loop") {
  BoundariedEmbedding nice = make_nice(projective_loop_b(3));
  CHECK(nice == projective_loop_b(3));
}

TEST_CASE("make_nice is idempotent, genus- and orientability-preserving") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 300; ++it) {
    auto be = random_boundaried(1 + static_cast<int>(rng() % 5), 3, 4, rng);
    auto nice = make_nice(be);
    CHECK(is_nice(nice));
    CHECK(valid_boundaried(nice));
    CHECK(euler_genus(nice.embedding) == euler_genus(be.embedding));
    CHECK(check_orientable(nice.embedding) == check_orientable(be.embedding));
    CHECK(nice.embedding.flag_count <= be.embedding.flag_count);
    CHECK(make_nice(nice) == nice);
    CHECK(nice.embedding.flag_count <=
          nice_flag_bound(be.capacity, euler_genus(be.embedding)));
  }
}

TEST_CASE("nicification preserves merge behavior") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 50; ++it) {
    auto e = random_boundaried(1 + static_cast<int>(rng() % 3), 2, 3, rng);
    auto partner = random_boundaried(1, 2, 3, rng);
    CHECK(genus_min_merge(make_nice(e), partner) == genus_min_merge(e, partner));
  }
}

TEST_CASE("canonical keys are invariant under flag relabeling") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 100; ++it) {
    auto be = random_boundaried(1 + static_cast<int>(rng() % 4), 3, 4, rng);
    std::vector<Flag> p(be.embedding.flag_count);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto moved = permuted(be, p);
    REQUIRE(valid_boundaried(moved));
    CHECK(canonical_key(moved) == canonical_key(be));
  }
}

TEST_CASE("canonical keys separate structure and labels") {
  CHECK(canonical_key(sphere_loop_b(2)) != canonical_key(projective_loop_b(2)));
  CHECK(canonical_key(empty_b(2)) != canonical_key(sphere_loop_b(2)));

  auto le12 = draw_edge_b(empty_b(4), {Anchor::bottom_labelled(1),
                                       Anchor::bottom_labelled(2)});
  auto le13 = draw_edge_b(empty_b(4), {Anchor::bottom_labelled(1),
                                       Anchor::bottom_labelled(3)});
  CHECK(canonical_key(le12) != canonical_key(le13));
  auto le21 = draw_edge_b(empty_b(4), {Anchor::bottom_labelled(2),
                                       Anchor::bottom_labelled(1)});
  CHECK(canonical_key(le12) == canonical_key(le21));
}

TEST_CASE("flag bound formula") {
  CHECK(nice_flag_bound(0, 0) == 0);
  CHECK(nice_flag_bound(0, 1) == 24);
  CHECK(nice_flag_bound(1, 0) == 48);
  CHECK(nice_flag_bound(2, 1) == 120);
}

TEST_CASE("enumeration counts at pinned flag caps") {
  auto count = [](int t, int g, int mf, bool ori = false) {
    EnumerateLimits lm;
    lm.max_flags = mf;
    return enumerate_nice(t, g, ori, lm).size();
  };
  CHECK(count(0, 0, 8) == 1);
  CHECK(count(0, 0, 12) == 1);
  CHECK(count(0, 1, 8) == 2);
  CHECK(count(0, 1, 12) == 2);
  CHECK(count(1, 0, 12) == 1);
  CHECK(count(1, 1, 8) == 4);
  CHECK(count(1, 1, 12) == 4);
  CHECK(count(2, 0, 8) == 2);
  CHECK(count(2, 0, 12) == 3);
  CHECK(count(2, 1, 8) == 11);
  CHECK(count(2, 1, 12) == 22);

  // euler genus of an orientable surface is even, so bounds 0 and 1 agree
  CHECK(count(0, 1, 12, true) == 1);
  CHECK(count(1, 1, 12, true) == 1);
  CHECK(count(2, 0, 12, true) == 3);
  CHECK(count(2, 1, 12, true) == 3);
}

TEST_CASE("enumeration output is nice, filtered, sorted, and deterministic") {
  EnumerateLimits lm;
  lm.max_flags = 12;
  auto out = enumerate_nice(2, 1, false, lm);
  std::set<CanonicalKey> keys;
  for (const auto& be : out) {
    CHECK(is_nice(be));
    CHECK(valid_boundaried(be));
    CHECK(euler_genus(be.embedding) <= 1);
    CHECK(be.capacity == 2);
    keys.insert(canonical_key(be));
  }
  CHECK(keys.size() == out.size());
  std::vector<CanonicalKey> in_order(keys.begin(), keys.end());
  for (size_t i = 0; i < out.size(); ++i)
    CHECK(canonical_key(out[i]) == in_order[i]);

  auto again = enumerate_nice(2, 1, false, lm);
  CHECK(again == out);

  auto ori = enumerate_nice(2, 1, true, lm);
  for (const auto& be : ori) CHECK(check_orientable(be.embedding));
}

TEST_CASE("enumeration reports state explosion") {
  EnumerateLimits lm;
  lm.max_flags = 12;
  lm.max_states = 3;
  CHECK_THROWS_AS(enumerate_nice(2, 1, false, lm), std::runtime_error);
}
