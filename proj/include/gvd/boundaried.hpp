// Boundaried embeddings: embeddings whose vertices may carry labels from
// {1, ..., capacity}, injectively.  Merging two boundaried embeddings forms
// their disjoint union and then fuses equally labelled vertices in every
// rotation-compatible way.

#ifndef GVD_BOUNDARIED_HPP
#define GVD_BOUNDARIED_HPP

#include <map>
#include <string>
#include <vector>

#include "gvd/embed_ops.hpp"
#include "gvd/flags.hpp"

namespace gvd {

struct BoundariedEmbedding {
  Embedding embedding;
  int capacity = 0;
  // least flag of a vertex orbit -> label in {1, ..., capacity}
  std::map<Flag, int> labels;

  bool operator==(const BoundariedEmbedding&) const = default;
};

// embedding is a valid graph embedding, labels are injective, in range, and
// keyed by least flags of distinct vertex orbits
bool valid_boundaried(const BoundariedEmbedding& be);

// label of the vertex orbit containing f, or 0
int label_at(const BoundariedEmbedding& be, Flag f);

std::vector<int> used_labels(const BoundariedEmbedding& be);

// All ways to fuse the two embeddings along shared labels.  A fused vertex
// keeps each side's rotation: restricting the merged vertex cycle to either
// side reproduces that side's cycle.  Results are deduplicated up to
// canonical form.  Capacities must agree.
std::vector<BoundariedEmbedding> merge_all(const BoundariedEmbedding& e1,
                                           const BoundariedEmbedding& e2);

// minimum euler genus over all merges (no deduplication pass)
int genus_min_merge(const BoundariedEmbedding& e1,
                    const BoundariedEmbedding& e2);

// delete_edge on the underlying embedding; labels follow their vertices and
// are dropped when the vertex loses all flags
BoundariedEmbedding delete_edge_b(const BoundariedEmbedding& be,
                                  Flag edge_flag);

// draw_edge on the underlying embedding; bottom_labelled anchors give the
// fresh vertex the requested (previously unused) label
BoundariedEmbedding draw_edge_b(const BoundariedEmbedding& be,
                                const Position& pos);

// embedding serialization plus capacity and "label least-flag" pairs
std::string write_boundaried(const BoundariedEmbedding& be);
BoundariedEmbedding parse_boundaried(const std::string& text);

}  // namespace gvd

#endif
