#include "gvd/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace gvd {

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be positive");
  Graph g;
  g.n = n;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete_bipartite: sides must be positive");
  Graph g;
  g.n = a + b;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) g.edges.emplace_back(u, v);
  return g;
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid: dimensions must be positive");
  Graph g;
  g.n = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c + 1; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  normalize_edges(g);
  return g;
}

Graph wall(int side) {
  if (side < 1) throw std::invalid_argument("wall: side must be positive");
  const int rows = side + 1;
  const int cols = 2 * side + 2;
  // grid with alternating vertical rungs, then trim the two degree-1 corners
  std::vector<std::pair<int, int>> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<int> degree(rows * cols, 0);
  auto add = [&](int a, int b) {
    edges.emplace_back(a, b);
    ++degree[a];
    ++degree[b];
  };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) add(id(r, c), id(r, c + 1));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if ((r + c) % 2 == 0) add(id(r, c), id(r + 1, c));

  std::vector<int> rename(rows * cols, 0);
  int next = 1;
  for (int v = 0; v < rows * cols; ++v)
    if (degree[v] >= 2) rename[v] = next++;
  Graph g;
  g.n = next - 1;
  for (auto [a, b] : edges)
    if (rename[a] && rename[b]) g.edges.emplace_back(rename[a], rename[b]);
  normalize_edges(g);
  return g;
}

Graph b_ell(int ell) {
  if (ell < 1) throw std::invalid_argument("b_ell: ell must be positive");
  Graph g;
  g.n = 5 * ell + 2;
  const int v_apex = 5 * ell + 1;
  const int w_apex = 5 * ell + 2;
  for (int i = 0; i < ell; ++i) {
    const int base = 5 * i;
    const int vi = base + 1;
    const int wi = base + 2;
    // K5 on {vi, wi, base+3..base+5} minus the edge vi wi
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b)
        if (!(a == 1 && b == 2)) g.edges.emplace_back(base + a, base + b);
    g.edges.emplace_back(vi, v_apex);
    g.edges.emplace_back(wi, w_apex);
  }
  normalize_edges(g);
  return g;
}

Graph random_connected(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected: n must be positive");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw std::invalid_argument("random_connected: edge count out of range");
  std::mt19937_64 rng(seed);
  Graph g;
  g.n = n;

  // random attachment spanning tree, then random extra edges
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> present;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (!present.emplace(u, v).second) return false;
    g.edges.emplace_back(u, v);
    return true;
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    add(order[i], order[pick(rng)]);
  }
  std::uniform_int_distribution<int> pick(1, n);
  while (g.m() < m) {
    int u = pick(rng), v = pick(rng);
    if (u != v) add(u, v);
  }
  normalize_edges(g);
  return g;
}

}  // namespace gvd
