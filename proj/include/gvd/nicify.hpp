// Nice boundaried embeddings and the reduction to them.
//
// An embedding is nice when (1) every unlabelled vertex with fewer than 6
// flags is a whole connected component and (2) every edge that touches two
// faces sees, on each of those faces, a flag of a labelled vertex besides
// the edge's own face flags and their phi partners.  Nice embeddings with
// label capacity t and genus g have at most 48t + 24g flags, which makes
// dynamic-programming tables finite.

#ifndef GVD_NICIFY_HPP
#define GVD_NICIFY_HPP

#include <compare>
#include <string>
#include <vector>

#include "gvd/boundaried.hpp"

namespace gvd {

struct NiceViolation {
  enum class Kind { none, small_vertex, edge_face };

  Kind kind = Kind::none;
  Flag vertex = -1;  // least flag of the offending vertex (small_vertex)
  Flag edge = -1;    // flag on the offending edge (edge_face)
  Flag face = -1;    // flag seeding the uncovered face (edge_face)
};

bool is_nice(const BoundariedEmbedding& be, NiceViolation* out = nullptr);

// delete the edge of edge_flag, one of whose endpoints is an unlabelled
// size-2 vertex; the result is equivalent (same genus-minimal merges)
BoundariedEmbedding simplify_delete_size2(const BoundariedEmbedding& be,
                                          Flag edge_flag);

// delete the edge of edge_flag, which touches two faces and whose face at
// edge_flag has no covering labelled flag; equivalent result
BoundariedEmbedding simplify_delete_two_faced(const BoundariedEmbedding& be,
                                              Flag edge_flag);

// remove an unlabelled, non-isolated size-4 vertex by joining its two edges
// into one; equivalent result
BoundariedEmbedding simplify_suppress4(const BoundariedEmbedding& be,
                                       Flag vertex_flag);

// apply the three simplifications (in that priority, scanning flags
// ascending) until the embedding is nice; genus and equivalence class are
// preserved and the flag count never grows
BoundariedEmbedding make_nice(const BoundariedEmbedding& be);

int nice_flag_bound(int label_capacity, int genus);

// Equal keys exactly when some flag bijection maps theta, sigma, phi and
// the labelling of one embedding onto the other.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const BoundariedEmbedding& be);

struct EnumerateLimits {
  int max_flags = -1;              // overrides 48t + 24g when in [0, bound)
  long long max_states = 5000000;  // explored embeddings before giving up
};

// all nice boundaried embeddings with the given label capacity and genus at
// most genus_bound, sorted by canonical key; grows embeddings one edge at a
// time, pruning by flag bound and genus.  Throws std::runtime_error when
// max_states is exceeded.
std::vector<BoundariedEmbedding> enumerate_nice(
    int label_capacity, int genus_bound, bool orientable_only = false,
    const EnumerateLimits& limits = {});

}  // namespace gvd

#endif
