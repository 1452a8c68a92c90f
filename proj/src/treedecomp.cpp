#include "gvd/treedecomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gvd {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool bag_contains(const std::vector<int>& bag, int v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

std::vector<int> bag_minus(const std::vector<int>& bag, int v) {
  std::vector<int> out;
  out.reserve(bag.size());
  for (int u : bag)
    if (u != v) out.push_back(u);
  return out;
}

std::vector<int> bag_plus(const std::vector<int>& bag, int v) {
  std::vector<int> out = bag;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::string validate_td(const TreeDecomposition& td, const Graph& g) {
  if (td.bags.empty()) return "decomposition has no bags";
  const int b = static_cast<int>(td.bags.size());
  for (int i = 0; i < b; ++i) {
    for (int v : td.bags[i])
      if (v < 1 || v > g.n)
        return "bag " + std::to_string(i + 1) + " contains vertex " +
               std::to_string(v) + " outside 1.." + std::to_string(g.n);
    if (!std::is_sorted(td.bags[i].begin(), td.bags[i].end()) ||
        std::adjacent_find(td.bags[i].begin(), td.bags[i].end()) !=
            td.bags[i].end())
      return "bag " + std::to_string(i + 1) + " is not sorted and duplicate-free";
  }
  if (static_cast<int>(td.tree_edges.size()) != b - 1)
    return "tree must have exactly " + std::to_string(b - 1) + " edges, found " +
           std::to_string(td.tree_edges.size());
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || x >= b || y < 0 || y >= b || x == y)
      return "tree edge (" + std::to_string(x + 1) + "," +
             std::to_string(y + 1) + ") is not between two distinct bags";
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(b, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != b) return "tree shape is disconnected";

  for (int v = 1; v <= g.n; ++v) {
    bool found = false;
    for (const auto& bag : td.bags)
      if (bag_contains(bag, v)) {
        found = true;
        break;
      }
    if (!found) return "vertex " + std::to_string(v) + " appears in no bag";
  }
  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (const auto& bag : td.bags)
      if (bag_contains(bag, u) && bag_contains(bag, v)) {
        covered = true;
        break;
      }
    if (!covered)
      return "edge {" + std::to_string(u) + "," + std::to_string(v) +
             "} is covered by no bag";
  }
  for (int v = 1; v <= g.n; ++v) {
    int start = -1;
    for (int i = 0; i < b; ++i)
      if (bag_contains(td.bags[i], v)) {
        start = i;
        break;
      }
    std::vector<char> vis(b, 0);
    std::vector<int> st = {start};
    vis[start] = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (!vis[y] && bag_contains(td.bags[y], v)) {
          vis[y] = 1;
          st.push_back(y);
        }
    }
    for (int i = 0; i < b; ++i)
      if (bag_contains(td.bags[i], v) && !vis[i])
        return "occurrence set of vertex " + std::to_string(v) +
               " is disconnected";
  }
  return "";
}

TreeDecomposition parse_td(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  int declared_bags = -1;
  bool have_header = false;
  std::vector<char> bag_seen;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int wplus1 = 0, n = 0;
      if (have_header) throw std::invalid_argument("duplicate s-line");
      if (!(ls >> kind >> declared_bags >> wplus1 >> n) || kind != "td")
        throw std::invalid_argument("malformed s-line, expected 's td <bags> <width+1> <n>'");
      if (n != g.n)
        throw std::invalid_argument("decomposition is for a graph on " +
                                    std::to_string(n) + " vertices, not " +
                                    std::to_string(g.n));
      if (declared_bags < 1) throw std::invalid_argument("decomposition needs at least one bag");
      have_header = true;
      td.n_graph = g.n;
      td.bags.assign(declared_bags, {});
      bag_seen.assign(declared_bags, 0);
      continue;
    }
    if (!have_header) throw std::invalid_argument("content before s-line");
    if (tok == "b") {
      int id = 0;
      if (!(ls >> id) || id < 1 || id > declared_bags)
        throw std::invalid_argument("bag id out of range");
      if (bag_seen[id - 1]) throw std::invalid_argument("duplicate bag " + std::to_string(id));
      bag_seen[id - 1] = 1;
      int v = 0;
      std::vector<int> bag;
      while (ls >> v) bag.push_back(v);
      td.bags[id - 1] = sorted_unique(bag);
      continue;
    }
    int a = 0, b = 0;
    {
      std::istringstream es(line);
      if (!(es >> a >> b)) throw std::invalid_argument("malformed line: " + line);
    }
    if (a < 1 || a > declared_bags || b < 1 || b > declared_bags)
      throw std::invalid_argument("tree edge endpoint out of range");
    td.tree_edges.emplace_back(a - 1, b - 1);
  }
  if (!have_header) throw std::invalid_argument("missing s-line");
  std::string err = validate_td(td, g);
  if (!err.empty()) throw std::invalid_argument("invalid tree decomposition: " + err);
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' '
      << td.n_graph << '\n';
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

TreeDecomposition heuristic_td(const Graph& g) {
  TreeDecomposition td;
  td.n_graph = g.n;
  if (g.n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<int>> adj(g.n + 1);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(g.n + 1, 0);
  std::vector<int> elim_pos(g.n + 1, -1);
  std::vector<int> elim_vertex;
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    long long best_fill = -1;
    for (int v = 1; v <= g.n; ++v) {
      if (gone[v]) continue;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      long long fill = 0;
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]].count(nb[j])) ++fill;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> bag(adj[best].begin(), adj[best].end());
    bag.push_back(best);
    td.bags.push_back(sorted_unique(bag));
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (int u : nb) adj[u].erase(best);
    adj[best].clear();
    gone[best] = 1;
    elim_pos[best] = step;
    elim_vertex.push_back(best);
  }
  for (int i = 0; i + 1 < g.n; ++i) {
    int v = elim_vertex[i];
    int parent = -1;
    for (int u : td.bags[i])
      if (u != v && (parent == -1 || elim_pos[u] < elim_pos[parent])) parent = u;
    int parent_bag = parent == -1 ? i + 1 : elim_pos[parent];
    td.tree_edges.emplace_back(i, parent_bag);
  }
  std::string err = validate_td(td, g);
  if (!err.empty()) throw std::logic_error("heuristic decomposition invalid: " + err);
  return td;
}

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

int RefinedDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

namespace {

// extends the partial tree upward from `bottom` until the bag equals `target`,
// forgetting surplus vertices first, then introducing missing ones
int chain_up(std::vector<DecompNode>& nodes, int bottom, const std::vector<int>& target) {
  int cur = bottom;
  std::vector<int> cur_bag = nodes[bottom].bag;
  std::vector<int> to_forget, to_introduce;
  for (int v : cur_bag)
    if (!bag_contains(target, v)) to_forget.push_back(v);
  for (int v : target)
    if (!bag_contains(cur_bag, v)) to_introduce.push_back(v);
  for (int v : to_forget) {
    DecompNode nd;
    nd.type = NodeType::forget;
    nd.vertex = v;
    cur_bag = bag_minus(cur_bag, v);
    nd.bag = cur_bag;
    nd.children = {cur};
    nodes.push_back(nd);
    cur = static_cast<int>(nodes.size()) - 1;
  }
  for (int v : to_introduce) {
    DecompNode nd;
    nd.type = NodeType::introduce;
    nd.vertex = v;
    cur_bag = bag_plus(cur_bag, v);
    nd.bag = cur_bag;
    nd.children = {cur};
    nodes.push_back(nd);
    cur = static_cast<int>(nodes.size()) - 1;
  }
  return cur;
}

void fix_parents(std::vector<DecompNode>& nodes, int root) {
  for (auto& nd : nodes) nd.parent = -1;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (int c : nodes[i].children) nodes[c].parent = static_cast<int>(i);
  nodes[root].parent = -1;
}

}  // namespace

NiceDecomposition make_nice_td(const TreeDecomposition& td, const Graph& g) {
  std::string err = validate_td(td, g);
  if (!err.empty()) throw std::invalid_argument("invalid tree decomposition: " + err);
  const int b = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  NiceDecomposition nice;
  // post-order over the input tree rooted at bag 0
  std::vector<int> order, parent_of(b, -1);
  {
    std::vector<int> stack = {0};
    std::vector<char> seen(b, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          parent_of[y] = x;
          stack.push_back(y);
        }
    }
    std::reverse(order.begin(), order.end());
  }
  std::vector<int> top_of(b, -1);
  for (int x : order) {
    std::vector<int> kids;
    for (int y : adj[x])
      if (y != parent_of[x]) kids.push_back(y);
    std::vector<int> tops;
    for (int y : kids) tops.push_back(chain_up(nice.nodes, top_of[y], td.bags[x]));
    if (tops.empty()) {
      DecompNode leaf;
      leaf.type = NodeType::leaf;
      nice.nodes.push_back(leaf);
      top_of[x] = chain_up(nice.nodes, static_cast<int>(nice.nodes.size()) - 1,
                           td.bags[x]);
      continue;
    }
    int acc = tops[0];
    for (size_t i = 1; i < tops.size(); ++i) {
      DecompNode join;
      join.type = NodeType::join;
      join.bag = td.bags[x];
      join.children = {acc, tops[i]};
      nice.nodes.push_back(join);
      acc = static_cast<int>(nice.nodes.size()) - 1;
    }
    top_of[x] = acc;
  }
  nice.root = chain_up(nice.nodes, top_of[0], {});
  fix_parents(nice.nodes, nice.root);

  err = validate_nice(nice, g);
  if (!err.empty()) throw std::logic_error("nice decomposition invalid: " + err);
  return nice;
}

namespace {

// shared structural checks for the rooted forms; edge leaves allowed only
// when `refined` is set
std::string validate_rooted(const std::vector<DecompNode>& nodes, int root,
                            const Graph& g, bool refined) {
  const int b = static_cast<int>(nodes.size());
  if (b == 0 || root < 0 || root >= b) return "missing root";
  if (!nodes[root].bag.empty()) return "root bag is not empty";
  if (nodes[root].parent != -1) return "root has a parent";
  std::vector<int> seen_parent(b, -1);
  for (int i = 0; i < b; ++i)
    for (int c : nodes[i].children) {
      if (c < 0 || c >= b) return "child index out of range";
      if (seen_parent[c] != -1) return "node has two parents";
      seen_parent[c] = i;
      if (nodes[c].parent != i) return "parent pointer mismatch";
    }
  int reached = 0;
  std::vector<int> stack = {root};
  std::vector<char> vis(b, 0);
  vis[root] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : nodes[x].children)
      if (vis[c]) return "cycle in rooted tree";
      else {
        vis[c] = 1;
        stack.push_back(c);
      }
  }
  if (reached != b) return "rooted tree is disconnected";

  for (int i = 0; i < b; ++i) {
    const DecompNode& nd = nodes[i];
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end()))
      return "bag of node " + std::to_string(i) + " is not sorted";
    switch (nd.type) {
      case NodeType::leaf:
        if (!nd.children.empty()) return "leaf with children";
        if (!nd.bag.empty()) return "leaf bag is not empty";
        break;
      case NodeType::introduce: {
        if (nd.children.size() != 1) return "introduce node without exactly one child";
        const auto& cb = nodes[nd.children[0]].bag;
        if (bag_contains(cb, nd.vertex) || !bag_contains(nd.bag, nd.vertex) ||
            bag_plus(cb, nd.vertex) != nd.bag)
          return "introduce node " + std::to_string(i) +
                 " does not add exactly vertex " + std::to_string(nd.vertex);
        break;
      }
      case NodeType::forget: {
        if (nd.children.size() != 1) return "forget node without exactly one child";
        const auto& cb = nodes[nd.children[0]].bag;
        if (!bag_contains(cb, nd.vertex) || bag_contains(nd.bag, nd.vertex) ||
            bag_minus(cb, nd.vertex) != nd.bag)
          return "forget node " + std::to_string(i) +
                 " does not remove exactly vertex " + std::to_string(nd.vertex);
        break;
      }
      case NodeType::join:
        if (nd.children.size() != 2) return "join node without exactly two children";
        if (nodes[nd.children[0]].bag != nd.bag || nodes[nd.children[1]].bag != nd.bag)
          return "join node " + std::to_string(i) + " has unequal child bags";
        break;
      case NodeType::edge_leaf: {
        if (!refined) return "edge leaf in unrefined decomposition";
        if (!nd.children.empty()) return "edge leaf with children";
        auto [u, v] = nd.edge;
        if (!g.has_edge(u, v)) return "edge leaf for a non-edge";
        if (!bag_contains(nd.bag, u) || !bag_contains(nd.bag, v))
          return "edge leaf bag misses an endpoint";
        break;
      }
    }
  }

  // the rooted structure must still be a tree decomposition of g
  TreeDecomposition flat;
  flat.n_graph = g.n;
  for (const auto& nd : nodes) flat.bags.push_back(nd.bag);
  for (int i = 0; i < b; ++i)
    if (i != root) flat.tree_edges.emplace_back(i, nodes[i].parent);
  return validate_td(flat, g);
}

}  // namespace

std::string validate_nice(const NiceDecomposition& nice, const Graph& g) {
  return validate_rooted(nice.nodes, nice.root, g, false);
}

RefinedDecomposition refine(const NiceDecomposition& nice, const Graph& g) {
  std::string err = validate_nice(nice, g);
  if (!err.empty()) throw std::invalid_argument("invalid nice decomposition: " + err);

  RefinedDecomposition rd;
  rd.nodes = nice.nodes;
  rd.root = nice.root;
  const int original = static_cast<int>(rd.nodes.size());
  for (int t = 0; t < original; ++t) {
    if (rd.nodes[t].type != NodeType::forget) continue;
    int child = rd.nodes[t].children[0];
    int v = rd.nodes[t].vertex;
    const std::vector<int> child_bag = rd.nodes[child].bag;
    std::vector<std::pair<int, int>> incident;
    for (int u : rd.nodes[t].bag)
      if (g.has_edge(std::min(u, v), std::max(u, v)))
        incident.emplace_back(std::min(u, v), std::max(u, v));
    int below = child;
    for (auto it = incident.rbegin(); it != incident.rend(); ++it) {
      DecompNode leaf;
      leaf.type = NodeType::edge_leaf;
      leaf.bag = child_bag;
      leaf.edge = *it;
      rd.nodes.push_back(leaf);
      int leaf_id = static_cast<int>(rd.nodes.size()) - 1;
      DecompNode join;
      join.type = NodeType::join;
      join.bag = child_bag;
      join.children = {below, leaf_id};
      rd.nodes.push_back(join);
      below = static_cast<int>(rd.nodes.size()) - 1;
    }
    rd.nodes[t].children = {below};
  }
  fix_parents(rd.nodes, rd.root);

  rd.label_capacity = rd.width() + 1;
  rd.lambda.assign(g.n + 1, 0);
  // top-down: a vertex first enters a bag below the forget node that drops it,
  // so each vertex is labelled exactly once
  std::vector<int> stack = {rd.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    const std::vector<int>& pbag =
        rd.nodes[x].parent == -1 ? rd.nodes[rd.root].bag : rd.nodes[rd.nodes[x].parent].bag;
    for (int v : rd.nodes[x].bag) {
      if (bag_contains(pbag, v)) continue;
      if (rd.lambda[v] != 0)
        throw std::logic_error("vertex " + std::to_string(v) + " labelled twice");
      std::vector<char> used(rd.label_capacity + 1, 0);
      for (int u : rd.nodes[x].bag)
        if (u != v && rd.lambda[u] != 0) used[rd.lambda[u]] = 1;
      int pick = 0;
      for (int l = 1; l <= rd.label_capacity; ++l)
        if (!used[l]) {
          pick = l;
          break;
        }
      if (pick == 0) throw std::logic_error("ran out of labels");
      rd.lambda[v] = pick;
    }
    for (int c : rd.nodes[x].children) stack.push_back(c);
  }

  err = validate_refined(rd, g);
  if (!err.empty()) throw std::logic_error("refined decomposition invalid: " + err);
  return rd;
}

std::string validate_refined(const RefinedDecomposition& rd, const Graph& g) {
  std::string err = validate_rooted(rd.nodes, rd.root, g, true);
  if (!err.empty()) return err;
  const int b = static_cast<int>(rd.nodes.size());

  // every graph edge must sit on exactly one edge leaf
  std::map<std::pair<int, int>, int> leaf_count;
  for (const auto& nd : rd.nodes)
    if (nd.type == NodeType::edge_leaf) ++leaf_count[nd.edge];
  for (auto [u, v] : g.edges) {
    int c = leaf_count.count({u, v}) ? leaf_count[{u, v}] : 0;
    if (c != 1)
      return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} has " +
             std::to_string(c) + " edge leaves";
  }
  for (auto& [e, c] : leaf_count)
    if (!g.has_edge(e.first, e.second)) return "edge leaf for a non-edge";

  // accumulate subtree edge sets and subtree vertex sets bottom-up
  std::vector<int> order;
  {
    std::vector<int> stack = {rd.root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int c : rd.nodes[x].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
  }
  std::vector<std::set<std::pair<int, int>>> edges_of(b);
  std::vector<std::set<int>> alpha(b);
  for (int x : order) {
    const DecompNode& nd = rd.nodes[x];
    alpha[x].insert(nd.bag.begin(), nd.bag.end());
    if (nd.type == NodeType::edge_leaf) edges_of[x].insert(nd.edge);
    for (int c : nd.children) {
      alpha[x].insert(alpha[c].begin(), alpha[c].end());
      for (const auto& e : edges_of[c])
        if (!edges_of[x].insert(e).second)
          return "join node " + std::to_string(x) + " sees edge {" +
                 std::to_string(e.first) + "," + std::to_string(e.second) +
                 "} from both children";
    }
    // every subtree edge must live on subtree vertices
    for (const auto& e : edges_of[x])
      if (!alpha[x].count(e.first) || !alpha[x].count(e.second))
        return "node " + std::to_string(x) + " carries an edge outside its subtree";
    // every edge already separated from the rest of the graph must be present
    for (auto [u, v] : g.edges) {
      if (!alpha[x].count(u) || !alpha[x].count(v)) continue;
      if (bag_contains(nd.bag, u) && bag_contains(nd.bag, v)) continue;
      if (!edges_of[x].count({u, v}))
        return "node " + std::to_string(x) + " misses settled edge {" +
               std::to_string(u) + "," + std::to_string(v) + "}";
    }
  }
  if (edges_of[rd.root].size() != g.edges.size())
    return "root accounts for " + std::to_string(edges_of[rd.root].size()) +
           " of " + std::to_string(g.edges.size()) + " edges";

  if (static_cast<int>(rd.lambda.size()) != g.n + 1) return "labelling has wrong size";
  for (int v = 1; v <= g.n; ++v)
    if (rd.lambda[v] < 1 || rd.lambda[v] > rd.label_capacity)
      return "vertex " + std::to_string(v) + " has label " +
             std::to_string(rd.lambda[v]) + " outside 1.." +
             std::to_string(rd.label_capacity);
  for (int i = 0; i < b; ++i) {
    std::set<int> seen;
    for (int v : rd.nodes[i].bag)
      if (!seen.insert(rd.lambda[v]).second)
        return "labelling is not injective on bag of node " + std::to_string(i);
  }
  return "";
}

}  // namespace gvd
