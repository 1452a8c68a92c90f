#include "gvd/dp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gvd/boundaried.hpp"
#include "gvd/nicify.hpp"
#include "gvd/oracle.hpp"

namespace gvd {

namespace {

using Clock = std::chrono::steady_clock;

struct TableKey {
  std::vector<int> deleted;  // sorted bag vertices marked for deletion
  CanonicalKey key;

  auto operator<=>(const TableKey&) const = default;
};

enum class StepKind { none, copy, forget_keep, forget_delete, join };

struct Provenance {
  StepKind kind = StepKind::none;
  int deleted_vertex = 0;
  TableKey child_a;
  TableKey child_b;
};

struct Cell {
  int value = 0;  // deletions already committed at forgotten vertices
  BoundariedEmbedding emb;
  Provenance prov;
};

using Table = std::map<TableKey, Cell>;

struct Candidate {
  TableKey target;
  int value = 0;
  BoundariedEmbedding emb;
  Provenance prov;
};

// total order so the surviving cell per key is thread-count independent
bool candidate_less(const Candidate& a, const Candidate& b) {
  return std::tie(a.target, a.value, a.prov.child_a, a.prov.child_b) <
         std::tie(b.target, b.value, b.prov.child_a, b.prov.child_b);
}

struct Engine {
  const Graph& g;
  const RefinedDecomposition& rd;
  const SolveOptions& opts;
  Clock::time_point deadline{};
  bool has_deadline = false;
  std::atomic<bool> expired{false};
  std::vector<Table> tables;
  SolveStats stats;

  Engine(const Graph& g_, const RefinedDecomposition& rd_,
         const SolveOptions& opts_)
      : g(g_), rd(rd_), opts(opts_), tables(rd_.nodes.size()) {
    if (opts.time_limit_seconds > 0) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(
                                        opts.time_limit_seconds));
    }
  }

  bool out_of_time() {
    if (expired.load(std::memory_order_relaxed)) return true;
    if (has_deadline && Clock::now() > deadline) {
      expired.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  // committed deletions plus pending marks can only grow toward the root
  bool pruned(const TableKey& key, int value) const {
    return opts.prune_budget &&
           value + static_cast<int>(key.deleted.size()) > opts.budget;
  }

  void consider(Table& t, TableKey key, int value, BoundariedEmbedding emb,
                Provenance prov) {
    if (pruned(key, value)) return;
    auto it = t.find(key);
    if (it == t.end())
      t.emplace(std::move(key), Cell{value, std::move(emb), std::move(prov)});
    else if (value < it->second.value)
      it->second = Cell{value, std::move(emb), std::move(prov)};
  }

  BoundariedEmbedding empty_embedding() const {
    BoundariedEmbedding be;
    be.capacity = rd.label_capacity;
    return be;
  }

  void do_leaf(int node) {
    BoundariedEmbedding empty = empty_embedding();
    CanonicalKey key = canonical_key(empty);
    consider(tables[node], TableKey{{}, key}, 0, std::move(empty), {});
  }

  // one cell per deletion-marked subset of the bag: the edge is drawn as an
  // isolated labelled edge unless an endpoint is marked
  void do_edge_leaf(int node) {
    const DecompNode& nd = rd.nodes[node];
    const std::vector<int>& bag = nd.bag;
    if (bag.size() > 25) throw std::runtime_error("bag too large to enumerate");
    auto [u, v] = nd.edge;
    BoundariedEmbedding empty = empty_embedding();
    BoundariedEmbedding drawn =
        draw_edge_b(empty, Position{Anchor::bottom_labelled(rd.lambda[u]),
                                    Anchor::bottom_labelled(rd.lambda[v])});
    CanonicalKey empty_key = canonical_key(empty);
    CanonicalKey drawn_key = canonical_key(drawn);
    for (unsigned mask = 0; mask < (1u << bag.size()); ++mask) {
      std::vector<int> marked;
      bool hit = false;
      for (size_t i = 0; i < bag.size(); ++i)
        if (mask >> i & 1) {
          marked.push_back(bag[i]);
          hit = hit || bag[i] == u || bag[i] == v;
        }
      consider(tables[node],
               TableKey{std::move(marked), hit ? empty_key : drawn_key}, 0,
               hit ? empty : drawn, {});
    }
  }

  // the new bag vertex has no settled edges yet: duplicate every child cell
  // with the vertex kept and with it marked for deletion
  void do_introduce(int node) {
    const DecompNode& nd = rd.nodes[node];
    const Table& child = tables[nd.children[0]];
    for (const auto& [k, c] : child) {
      Provenance prov{StepKind::copy, 0, k, {}};
      consider(tables[node], k, c.value, c.emb, prov);
      TableKey marked = k;
      marked.deleted.insert(std::upper_bound(marked.deleted.begin(),
                                             marked.deleted.end(), nd.vertex),
                            nd.vertex);
      consider(tables[node], std::move(marked), c.value, c.emb, prov);
    }
  }

  void do_forget(int node) {
    const DecompNode& nd = rd.nodes[node];
    const Table& child = tables[nd.children[0]];
    const int v = nd.vertex;
    const int label = rd.lambda[v];
    for (const auto& [k, c] : child) {
      if (std::binary_search(k.deleted.begin(), k.deleted.end(), v)) {
        TableKey nk = k;
        nk.deleted.erase(
            std::find(nk.deleted.begin(), nk.deleted.end(), v));
        consider(tables[node], std::move(nk), c.value + 1, c.emb,
                 Provenance{StepKind::forget_delete, v, k, {}});
      } else {
        BoundariedEmbedding be = c.emb;
        for (auto it = be.labels.begin(); it != be.labels.end(); ++it)
          if (it->second == label) {
            be.labels.erase(it);
            break;
          }
        be = make_nice(be);
        TableKey nk{k.deleted, canonical_key(be)};
        consider(tables[node], std::move(nk), c.value, std::move(be),
                 Provenance{StepKind::forget_keep, 0, k, {}});
      }
    }
  }

  struct JoinJob {
    const TableKey* k1;
    const Cell* c1;
    const TableKey* k2;
    const Cell* c2;
  };

  std::vector<Candidate> run_join_job(const JoinJob& jb) {
    std::vector<Candidate> out;
    for (BoundariedEmbedding& merged : merge_all(jb.c1->emb, jb.c2->emb)) {
      if (euler_genus(merged.embedding) > opts.genus_bound) continue;
      if (opts.orientable && !check_orientable(merged.embedding)) continue;
      Candidate cand;
      cand.emb = make_nice(merged);
      cand.target = TableKey{jb.k1->deleted, canonical_key(cand.emb)};
      cand.value = jb.c1->value + jb.c2->value;
      cand.prov = Provenance{StepKind::join, 0, *jb.k1, *jb.k2};
      out.push_back(std::move(cand));
    }
    return out;
  }

  void do_join(int node) {
    const DecompNode& nd = rd.nodes[node];
    const Table& t1 = tables[nd.children[0]];
    const Table& t2 = tables[nd.children[1]];

    // cells join only within equal deletion marks; keys are grouped by them
    std::vector<JoinJob> jobs;
    auto it1 = t1.begin();
    auto it2 = t2.begin();
    while (it1 != t1.end() && it2 != t2.end()) {
      if (it1->first.deleted < it2->first.deleted) {
        ++it1;
        continue;
      }
      if (it2->first.deleted < it1->first.deleted) {
        ++it2;
        continue;
      }
      auto end1 = it1;
      while (end1 != t1.end() && end1->first.deleted == it1->first.deleted)
        ++end1;
      auto end2 = it2;
      while (end2 != t2.end() && end2->first.deleted == it2->first.deleted)
        ++end2;
      for (auto a = it1; a != end1; ++a)
        for (auto b = it2; b != end2; ++b)
          jobs.push_back({&a->first, &a->second, &b->first, &b->second});
      it1 = end1;
      it2 = end2;
    }

    std::vector<std::vector<Candidate>> results(jobs.size());
    auto worker = [&](std::atomic<size_t>& cursor) {
      for (size_t i = cursor.fetch_add(1); i < jobs.size();
           i = cursor.fetch_add(1)) {
        if (out_of_time()) return;
        results[i] = run_join_job(jobs[i]);
      }
    };
    std::atomic<size_t> cursor{0};
    int nthreads = static_cast<int>(std::max<long long>(
        1, std::min<long long>(opts.threads,
                               static_cast<long long>(jobs.size()))));
    if (nthreads <= 1) {
      worker(cursor);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nthreads);
      for (int i = 0; i < nthreads; ++i)
        pool.emplace_back([&]() { worker(cursor); });
      for (auto& th : pool) th.join();
    }
    if (expired.load(std::memory_order_relaxed)) return;

    std::vector<Candidate> all;
    for (auto& r : results) {
      stats.merge_candidates += static_cast<long long>(r.size());
      for (auto& c : r) all.push_back(std::move(c));
    }
    std::sort(all.begin(), all.end(), candidate_less);
    Table& t = tables[node];
    for (auto& c : all) {
      if (pruned(c.target, c.value)) continue;
      if (t.find(c.target) == t.end())
        t.emplace(std::move(c.target),
                  Cell{c.value, std::move(c.emb), std::move(c.prov)});
    }
  }

  bool run() {
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
    for (int node : order) {
      if (out_of_time()) return false;
      switch (rd.nodes[node].type) {
        case NodeType::leaf:
          do_leaf(node);
          break;
        case NodeType::edge_leaf:
          do_edge_leaf(node);
          break;
        case NodeType::introduce:
          do_introduce(node);
          break;
        case NodeType::forget:
          do_forget(node);
          break;
        case NodeType::join:
          do_join(node);
          break;
      }
      if (expired.load(std::memory_order_relaxed)) return false;
      long long sz = static_cast<long long>(tables[node].size());
      stats.table_cells += sz;
      stats.max_node_cells = std::max(stats.max_node_cells, sz);
      if (stats.table_cells > opts.max_table_cells) {
        expired.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    return true;
  }

  std::vector<int> reconstruct(const TableKey& root_key) const {
    std::vector<int> witness;
    std::vector<std::pair<int, const TableKey*>> stack = {
        {rd.root, &root_key}};
    while (!stack.empty()) {
      auto [node, key] = stack.back();
      stack.pop_back();
      const Cell& cell = tables[node].at(*key);
      const auto& children = rd.nodes[node].children;
      switch (cell.prov.kind) {
        case StepKind::none:
          break;
        case StepKind::copy:
        case StepKind::forget_keep:
          stack.push_back({children[0], &cell.prov.child_a});
          break;
        case StepKind::forget_delete:
          witness.push_back(cell.prov.deleted_vertex);
          stack.push_back({children[0], &cell.prov.child_a});
          break;
        case StepKind::join:
          stack.push_back({children[0], &cell.prov.child_a});
          stack.push_back({children[1], &cell.prov.child_b});
          break;
      }
    }
    std::sort(witness.begin(), witness.end());
    return witness;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// the deletion set is checked on an independent path: the scheme-enumeration
// oracle when its search space is small enough, otherwise a fresh zero-budget
// run on the reduced graph
bool verify_deletion_set(const Graph& g, const TreeDecomposition& td,
                         const SolveOptions& opts,
                         const std::vector<int>& witness, bool* verified) {
  Graph reduced = induced_subgraph_without(g, witness);
  try {
    OracleOptions oo;
    oo.max_schemes = 2000000;
    oo.orientable_only = opts.orientable;
    oo.threads = opts.threads;
    *verified = true;
    return exact_genus(reduced, oo) <= opts.genus_bound;
  } catch (const std::runtime_error&) {
  }
  SolveOptions rerun = opts;
  rerun.budget = 0;
  rerun.verify_witness = false;
  rerun.prune_budget = true;
  SolveResult r = solve(reduced, td, rerun);
  if (r.timed_out) {
    *verified = false;
    return true;
  }
  *verified = true;
  return r.yes;
}

}  // namespace

SolveResult solve(const Graph& g, const TreeDecomposition& td,
                  const SolveOptions& opts) {
  if (opts.genus_bound < 0) throw std::invalid_argument("negative genus bound");
  if (opts.budget < 0) throw std::invalid_argument("negative budget");
  if (opts.threads < 1) throw std::invalid_argument("thread count must be positive");
  auto t0 = Clock::now();

  NiceDecomposition nice = make_nice_td(td, g);
  RefinedDecomposition rd = refine(nice, g);

  Engine engine(g, rd, opts);
  engine.stats.width = rd.width();
  engine.stats.node_count = static_cast<int>(rd.nodes.size());

  SolveResult res;
  res.stats = engine.stats;
  if (!engine.run()) {
    res.timed_out = true;
    res.stats = engine.stats;
    res.stats.seconds = seconds_since(t0);
    return res;
  }

  const Table& root = engine.tables[rd.root];
  const TableKey* best = nullptr;
  int best_value = INT_MAX;
  for (const auto& [k, c] : root)
    if (c.value < best_value) {
      best_value = c.value;
      best = &k;
    }
  if (best != nullptr && !opts.prune_budget && best_value > g.n)
    throw std::logic_error("deletion count exceeds vertex count");

  if (best != nullptr) res.min_deletions = best_value;
  res.yes = best != nullptr && best_value <= opts.budget;
  if (res.yes) {
    res.witness = engine.reconstruct(*best);
    if (static_cast<int>(res.witness.size()) != best_value)
      throw std::logic_error("witness size disagrees with table value");
    if (opts.verify_witness) {
      if (!verify_deletion_set(g, td, opts, res.witness,
                               &res.witness_verified))
        throw std::logic_error("witness failed independent verification");
    }
  }
  res.stats = engine.stats;
  res.stats.seconds = seconds_since(t0);
  return res;
}

SolveResult solve(const Graph& g, const SolveOptions& opts) {
  return solve(g, heuristic_td(g), opts);
}

int graph_genus_dp(const Graph& g, const TreeDecomposition& td,
                   bool orientable, int threads, int genus_cap) {
  const int cap = genus_cap >= 0 ? genus_cap : 2 * g.m() + 2;
  for (int bound = 0; bound <= cap; ++bound) {
    SolveOptions so;
    so.genus_bound = bound;
    so.budget = 0;
    so.orientable = orientable;
    so.threads = threads;
    so.prune_budget = true;
    so.verify_witness = false;
    SolveResult r = solve(g, td, so);
    if (r.timed_out)
      throw std::runtime_error("resource limit hit while computing genus");
    if (r.yes) return bound;
  }
  throw std::runtime_error("genus exceeds cap " + std::to_string(cap));
}

int graph_genus_dp(const Graph& g, bool orientable, int threads,
                   int genus_cap) {
  return graph_genus_dp(g, heuristic_td(g), orientable, threads, genus_cap);
}

}  // namespace gvd
