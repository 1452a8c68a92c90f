#include "gvd/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gvd {

namespace {

// (enter, exit) flags of a dart under the edge's signature
std::pair<Flag, Flag> dart_flags(const EmbeddingScheme& s, int dart) {
  const int edge = dart / 2;
  const Flag base = 4 * edge;
  if (dart % 2 == 0) return {base, base + 1};
  if (s.signature[edge] > 0) return {base + 3, base + 2};
  return {base + 2, base + 3};
}

}  // namespace

Embedding scheme_to_embedding(const Graph& g, const EmbeddingScheme& s) {
  const int m = g.m();
  if (static_cast<int>(s.signature.size()) != m)
    throw std::invalid_argument("scheme signature size mismatch");
  if (static_cast<int>(s.rotations.size()) != g.n + 1)
    throw std::invalid_argument("scheme rotation table size mismatch");

  std::vector<char> seen_dart(2 * m, 0);
  Embedding e;
  e.flag_count = 4 * m;
  std::vector<Flag> theta(e.flag_count), sigma(e.flag_count), phi(e.flag_count);
  for (int i = 0; i < m; ++i) {
    theta[4 * i] = 4 * i + 2;
    theta[4 * i + 2] = 4 * i;
    theta[4 * i + 1] = 4 * i + 3;
    theta[4 * i + 3] = 4 * i + 1;
    sigma[4 * i] = 4 * i + 1;
    sigma[4 * i + 1] = 4 * i;
    sigma[4 * i + 2] = 4 * i + 3;
    sigma[4 * i + 3] = 4 * i + 2;
    if (s.signature[i] != 1 && s.signature[i] != -1)
      throw std::invalid_argument("signature entries must be +1 or -1");
  }
  for (int v = 1; v <= g.n; ++v) {
    const std::vector<int>& rot = s.rotations[v];
    for (size_t j = 0; j < rot.size(); ++j) {
      const int dart = rot[j];
      if (dart < 0 || dart >= 2 * m || seen_dart[dart])
        throw std::invalid_argument("rotation reuses or overflows a dart");
      seen_dart[dart] = 1;
      const int at = dart % 2 == 0 ? g.edges[dart / 2].first
                                   : g.edges[dart / 2].second;
      if (at != v) throw std::invalid_argument("dart listed at wrong vertex");
      const int next = rot[(j + 1) % rot.size()];
      Flag exit = dart_flags(s, dart).second;
      Flag enter = dart_flags(s, next).first;
      phi[exit] = enter;
      phi[enter] = exit;
    }
  }
  for (int d = 0; d < 2 * m; ++d)
    if (!seen_dart[d]) throw std::invalid_argument("dart missing from rotations");

  e.theta = Involution(std::move(theta));
  e.sigma = Involution(std::move(sigma));
  e.phi = Involution(std::move(phi));
  return e;
}

namespace {

struct ComponentTask {
  Graph graph;                       // reindexed 1..n_local
  std::vector<std::vector<int>> darts_at;  // per local vertex
  std::vector<int> free_sign_edges;  // indices with enumerable signature
};

std::vector<ComponentTask> split_components(const Graph& g) {
  std::vector<int> comp(g.n + 1, -1);
  std::vector<std::vector<int>> adj = g.adjacency();
  int count = 0;
  for (int start = 1; start <= g.n; ++start) {
    if (comp[start] != -1 || adj[start].empty()) continue;
    comp[start] = count;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (comp[v] == -1) {
          comp[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }

  std::vector<ComponentTask> tasks(count);
  std::vector<int> local(g.n + 1, 0);
  std::vector<int> sizes(count, 0);
  for (int v = 1; v <= g.n; ++v)
    if (comp[v] != -1) local[v] = ++sizes[comp[v]];
  for (int c = 0; c < count; ++c) tasks[c].graph.n = sizes[c];
  for (auto [u, v] : g.edges) {
    ComponentTask& t = tasks[comp[u]];
    t.graph.edges.emplace_back(local[u], local[v]);
  }
  for (ComponentTask& t : tasks) {
    t.darts_at.assign(t.graph.n + 1, {});
    for (int i = 0; i < t.graph.m(); ++i) {
      t.darts_at[t.graph.edges[i].first].push_back(2 * i);
      t.darts_at[t.graph.edges[i].second].push_back(2 * i + 1);
    }
  }
  return tasks;
}

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// spanning-forest edges can be pinned to +1: flipping all non-loop edges at
// one vertex never changes the embedding's surface
std::vector<int> non_forest_edges(const Graph& g) {
  std::vector<int> parent(g.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<int> out;
  for (int i = 0; i < g.m(); ++i) {
    int a = find(g.edges[i].first);
    int b = find(g.edges[i].second);
    if (a == b) {
      out.push_back(i);
    } else {
      parent[a] = b;
    }
  }
  return out;
}

struct SchemeSpace {
  std::vector<int> perm_vertices;    // local vertices with degree >= 2
  std::vector<long long> perm_sizes; // (deg-1)! per such vertex
  int sign_bits = 0;
  long long total = 1;
};

SchemeSpace scheme_space(const ComponentTask& task, const OracleOptions& opts,
                         long long budget) {
  SchemeSpace space;
  for (int v = 1; v <= task.graph.n; ++v) {
    const int d = static_cast<int>(task.darts_at[v].size());
    if (d >= 3) {
      if (d > 20) throw std::runtime_error("exact_genus: scheme ceiling exceeded");
      space.perm_vertices.push_back(v);
      space.perm_sizes.push_back(factorial(d - 1));
      if (space.total > budget / space.perm_sizes.back())
        throw std::runtime_error("exact_genus: scheme ceiling exceeded");
      space.total *= space.perm_sizes.back();
    }
  }
  space.sign_bits = opts.orientable_only
                        ? 0
                        : static_cast<int>(task.free_sign_edges.size());
  for (int b = 0; b < space.sign_bits; ++b) {
    if (space.total > budget / 2)
      throw std::runtime_error("exact_genus: scheme ceiling exceeded");
    space.total *= 2;
  }
  return space;
}

// decode scheme `index`, returning phi and the face count of the embedding
int faces_of_scheme(const ComponentTask& task, const SchemeSpace& space,
                    long long index, std::vector<int>& sign,
                    std::vector<int>& rot, std::vector<Flag>& phi,
                    std::vector<char>& visited) {
  const Graph& g = task.graph;
  const int m = g.m();

  std::fill(sign.begin(), sign.end(), 1);
  for (int b = 0; b < space.sign_bits; ++b) {
    if (index & 1) sign[task.free_sign_edges[b]] = -1;
    index >>= 1;
  }

  auto enter_exit = [&](int dart) -> std::pair<Flag, Flag> {
    const int edge = dart / 2;
    const Flag base = 4 * edge;
    if (dart % 2 == 0) return {base, base + 1};
    if (sign[edge] > 0) return {base + 3, base + 2};
    return {base + 2, base + 3};
  };

  auto wire = [&](const int* darts, int count) {
    for (int j = 0; j < count; ++j) {
      Flag exit = enter_exit(darts[j]).second;
      Flag enter = enter_exit(darts[(j + 1) % count]).first;
      phi[exit] = enter;
      phi[enter] = exit;
    }
  };

  for (int v = 1; v <= g.n; ++v) {
    const std::vector<int>& darts = task.darts_at[v];
    if (darts.size() < 3) {
      if (!darts.empty()) wire(darts.data(), static_cast<int>(darts.size()));
    }
  }
  for (size_t i = 0; i < space.perm_vertices.size(); ++i) {
    const std::vector<int>& darts = task.darts_at[space.perm_vertices[i]];
    const int d = static_cast<int>(darts.size());
    long long rank = index % space.perm_sizes[i];
    index /= space.perm_sizes[i];
    // factorial-number-system unranking of darts[1..], darts[0] pinned
    rot.assign(darts.begin() + 1, darts.end());
    int wired[21];
    wired[0] = darts[0];
    for (int slot = 0; slot < d - 1; ++slot) {
      long long f = factorial(d - 2 - slot);
      int pickidx = static_cast<int>(rank / f);
      rank %= f;
      wired[slot + 1] = rot[pickidx];
      rot.erase(rot.begin() + pickidx);
    }
    wire(wired, d);
  }

  std::fill(visited.begin(), visited.end(), 0);
  int faces = 0;
  for (Flag start = 0; start < 4 * m; ++start) {
    if (visited[start]) continue;
    ++faces;
    Flag cur = start;
    bool use_theta = true;
    while (!visited[cur]) {
      visited[cur] = 1;
      const int edge = cur / 4;
      const int off = cur % 4;
      Flag next;
      if (use_theta) {
        next = 4 * edge + (off ^ 2);
      } else {
        next = phi[cur];
      }
      use_theta = !use_theta;
      cur = next;
      if (cur == start) break;
    }
  }
  return faces;
}

int component_genus(const ComponentTask& task, const OracleOptions& opts,
                    long long budget) {
  const SchemeSpace space = scheme_space(task, opts, budget);
  const Graph& g = task.graph;
  const int m = g.m();
  const int verts = g.n;

  const int threads = static_cast<int>(
      std::max<long long>(1, std::min<long long>(opts.threads, space.total)));
  std::vector<int> best(threads, -1);
  auto worker = [&](int tid) {
    std::vector<int> sign(m);
    std::vector<int> rot;
    std::vector<Flag> phi(4 * m);
    std::vector<char> visited(4 * m);
    int local_best = -1;
    for (long long i = tid; i < space.total; i += threads) {
      int faces = faces_of_scheme(task, space, i, sign, rot, phi, visited);
      int genus = m - verts - faces + 2;
      if (local_best == -1 || genus < local_best) local_best = genus;
      if (local_best == 0) break;
    }
    best[tid] = local_best;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }
  int out = -1;
  for (int b : best)
    if (b != -1 && (out == -1 || b < out)) out = b;
  return out;
}

}  // namespace

int exact_genus(const Graph& g, const OracleOptions& opts) {
  std::vector<ComponentTask> tasks = split_components(g);
  for (ComponentTask& t : tasks) {
    if (opts.reduce_signatures)
      t.free_sign_edges = non_forest_edges(t.graph);
    else {
      t.free_sign_edges.resize(t.graph.m());
      std::iota(t.free_sign_edges.begin(), t.free_sign_edges.end(), 0);
    }
  }
  int total = 0;
  for (const ComponentTask& t : tasks)
    total += component_genus(t, opts, opts.max_schemes);
  return total;
}

std::optional<int> brute_force_gvd(const Graph& g, int genus_bound, int budget,
                                   const OracleOptions& opts) {
  if (genus_bound < 0 || budget < 0)
    throw std::invalid_argument("brute_force_gvd: negative bound");
  std::vector<int> chosen;
  for (int size = 0; size <= std::min(budget, g.n); ++size) {
    chosen.assign(size, 0);
    std::iota(chosen.begin(), chosen.end(), 1);
    while (true) {
      if (exact_genus(induced_subgraph_without(g, chosen), opts) <= genus_bound)
        return size;
      int i = size - 1;
      while (i >= 0 && chosen[i] == g.n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++chosen[i];
      for (int j = i + 1; j < size; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace gvd
