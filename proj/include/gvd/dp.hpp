// Solver for genus vertex deletion: decide whether deleting at most `budget`
// vertices from a graph leaves euler genus at most `genus_bound`, and if so
// produce a smallest deletion set.  Runs a dynamic program over a refined
// tree decomposition whose states are deletion-marked bag subsets paired
// with canonical nice boundaried embeddings.

#ifndef GVD_DP_HPP
#define GVD_DP_HPP

#include <vector>

#include "gvd/graph.hpp"
#include "gvd/treedecomp.hpp"

namespace gvd {

struct SolveOptions {
  int genus_bound = 0;
  int budget = 0;
  bool orientable = false;  // only orientable embeddings count
  int threads = 1;
  // discard table cells whose committed deletions already exceed the budget;
  // never changes the yes/no answer or a yes-instance minimum, but a
  // no-instance then reports no minimum
  bool prune_budget = false;
  bool verify_witness = true;
  double time_limit_seconds = 0;  // 0 disables the deadline
  long long max_table_cells = 1000000;
};

struct SolveStats {
  long long table_cells = 0;       // cells over all node tables
  long long max_node_cells = 0;
  long long merge_candidates = 0;  // merged embeddings surviving the filters
  int width = -1;
  int node_count = 0;
  double seconds = 0;
};

struct SolveResult {
  bool yes = false;
  // smallest deletion set size reaching the genus bound; exact whenever yes,
  // and also on no-instances when prune_budget is off; -1 when unknown
  int min_deletions = -1;
  std::vector<int> witness;  // sorted vertex ids, only on yes
  bool timed_out = false;
  bool witness_verified = false;
  SolveStats stats;
};

SolveResult solve(const Graph& g, const TreeDecomposition& td,
                  const SolveOptions& opts);
// convenience overload running on a min-fill decomposition
SolveResult solve(const Graph& g, const SolveOptions& opts);

// smallest genus bound reachable without any deletion, found by running the
// solver with increasing bounds; throws on resource exhaustion
int graph_genus_dp(const Graph& g, const TreeDecomposition& td,
                   bool orientable = false, int threads = 1,
                   int genus_cap = -1);
int graph_genus_dp(const Graph& g, bool orientable = false, int threads = 1,
                   int genus_cap = -1);

}  // namespace gvd

#endif
