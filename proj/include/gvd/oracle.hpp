// Brute-force genus oracle, independent of the embedding calculus: it
// enumerates rotation systems with edge signatures and reads the genus off
// the induced flag system.  Used to cross-check the dynamic program.

#ifndef GVD_ORACLE_HPP
#define GVD_ORACLE_HPP

#include <optional>

#include "gvd/flags.hpp"
#include "gvd/graph.hpp"

namespace gvd {

// Edge i owns darts 2i (at edges[i].first) and 2i+1 (at edges[i].second).
// rotations[v] lists the darts at v in cyclic order; signature[i] is +1 or
// -1 per edge.
struct EmbeddingScheme {
  std::vector<std::vector<int>> rotations;  // indexed by vertex, slot 0 unused
  std::vector<int> signature;
};

// Edge i gets flags 4i..4i+3: sigma pairs {4i, 4i+1} and {4i+2, 4i+3},
// theta pairs {4i, 4i+2} and {4i+1, 4i+3}; phi realizes the rotations,
// entering edge i at its first endpoint through flag 4i and leaving through
// 4i+1.  Unlike input graphs, the edge list here may contain loops.
Embedding scheme_to_embedding(const Graph& g, const EmbeddingScheme& s);

struct OracleOptions {
  long long max_schemes = 200000000;  // throws std::runtime_error beyond this
  bool orientable_only = false;       // all-positive signatures only
  bool reduce_signatures = true;      // pin a spanning forest to +1
  int threads = 1;
};

// minimum euler genus over all embedding schemes, per component
int exact_genus(const Graph& g, const OracleOptions& opts = {});

// smallest deletion set size with exact_genus(G - Y) <= genus_bound, up to
// budget; nullopt when no such set exists
std::optional<int> brute_force_gvd(const Graph& g, int genus_bound, int budget,
                                   const OracleOptions& opts = {});

}  // namespace gvd

#endif
