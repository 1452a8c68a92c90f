// Tree decompositions in PACE .td format, their nice rooted form, and the
// refinement that materializes every graph edge as its own leaf below a
// dedicated join node.  The refinement also assigns each vertex a label in
// {1, ..., width+1} that is injective on every bag, so embeddings stored by
// the solver can address bag vertices by label.

#ifndef GVD_TREEDECOMP_HPP
#define GVD_TREEDECOMP_HPP

#include <string>
#include <utility>
#include <vector>

#include "gvd/graph.hpp"

namespace gvd {

struct TreeDecomposition {
  int n_graph = 0;
  std::vector<std::vector<int>> bags;  // sorted vertex lists
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

// empty string when valid; otherwise the first violated axiom with witness
std::string validate_td(const TreeDecomposition& td, const Graph& g);

// "s td <#bags> <width+1> <n>", "b <id> <vertices>", then tree edges
TreeDecomposition parse_td(const std::string& text, const Graph& g);
std::string write_td(const TreeDecomposition& td);

// min-fill elimination ordering; always valid, not necessarily optimal
TreeDecomposition heuristic_td(const Graph& g);

enum class NodeType { leaf, introduce, forget, join, edge_leaf };

struct DecompNode {
  NodeType type = NodeType::leaf;
  std::vector<int> bag;  // sorted
  int parent = -1;
  std::vector<int> children;
  int vertex = 0;                 // introduced or forgotten vertex
  std::pair<int, int> edge{0, 0};  // edge_leaf payload
};

struct NiceDecomposition {
  std::vector<DecompNode> nodes;
  int root = -1;

  int width() const;
};

// rooted, root bag empty, every node leaf/introduce/forget/join
NiceDecomposition make_nice_td(const TreeDecomposition& td, const Graph& g);
std::string validate_nice(const NiceDecomposition& nice, const Graph& g);

struct RefinedDecomposition {
  std::vector<DecompNode> nodes;
  int root = -1;
  int label_capacity = 0;     // width + 1
  std::vector<int> lambda;    // vertex -> label, injective on every bag

  int width() const;
};

// below every forget node, insert one join node and one edge leaf per graph
// edge from the forgotten vertex into the remaining bag (2 nodes per edge);
// assigns the vertex labelling top-down, reusing freed labels
RefinedDecomposition refine(const NiceDecomposition& nice, const Graph& g);
std::string validate_refined(const RefinedDecomposition& rd, const Graph& g);

}  // namespace gvd

#endif
