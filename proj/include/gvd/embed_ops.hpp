// Edge deletion and edge drawing on flag-system embeddings, together with
// the position calculus that makes the two operations mutually inverse.

#ifndef GVD_EMBED_OPS_HPP
#define GVD_EMBED_OPS_HPP

#include <vector>

#include "gvd/flags.hpp"

namespace gvd {

// Anchors address where a new edge end attaches:
//   flag             next to an existing flag f
//   bottom           the new edge end stays a vertex of its own
//   top / top_prime  the first end attaches to the second end's flags
//   bottom_labelled  bottom, and the fresh vertex receives a label
//                    (consumed by the boundaried wrapper)
struct Anchor {
  enum class Kind { flag, bottom, top, top_prime, bottom_labelled };

  Kind kind = Kind::bottom;
  Flag flag = -1;
  int label = 0;

  static Anchor at(Flag f) { return {Kind::flag, f, 0}; }
  static Anchor bottom() { return {Kind::bottom, -1, 0}; }
  static Anchor top() { return {Kind::top, -1, 0}; }
  static Anchor top_prime() { return {Kind::top_prime, -1, 0}; }
  static Anchor bottom_labelled(int label) {
    return {Kind::bottom_labelled, -1, label};
  }

  bool concrete() const { return kind == Kind::flag; }
  bool operator==(const Anchor&) const = default;
};

struct Position {
  Anchor a;
  Anchor b;

  bool operator==(const Position&) const = default;
};

struct EdgeDeletion {
  Embedding result;
  // old flag -> new flag, -1 for the four removed flags
  std::vector<Flag> new_of_old;
};

// removes the edge of edge_flag; rewires phi so the four edge flags pair
// among themselves, then drops them and renumbers the rest densely
EdgeDeletion delete_edge(const Embedding& e, Flag edge_flag);

// where the edge of x sits relative to the rest of the embedding; drawing a
// new edge at this position after delete_edge restores the embedding.
// b is always flag or bottom; a may also be top or top_prime.
Position position(const Embedding& e, Flag x);

// adds flags x = n, y = n+1, y' = n+2, x' = n+3 and attaches them at pos;
// inverse of delete_edge.  bottom_labelled anchors attach like bottom.
Embedding draw_edge(const Embedding& e, const Position& pos);

// true iff both anchors are concrete, distinct, lie on one face f, and the
// cycle of f reads phi(a), a, ..., b, phi(b), ...; drawing there splits f
// and keeps the genus unchanged
bool is_drawn_along_boundary(const Embedding& e, const Position& pos);

}  // namespace gvd

#endif
