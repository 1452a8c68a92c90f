#include "gvd/boundaried.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gvd/nicify.hpp"

namespace gvd {

namespace {

Flag least_of_vertex(const Embedding& e, Flag f) {
  std::vector<Flag> orbit = directed_object_orbit(e, ObjectKind::vertex, f);
  return *std::min_element(orbit.begin(), orbit.end());
}

}  // namespace

bool valid_boundaried(const BoundariedEmbedding& be) {
  if (!be.embedding.valid_graph()) return false;
  if (be.capacity < 0) return false;
  std::set<int> seen;
  for (auto [f, label] : be.labels) {
    if (label < 1 || label > be.capacity) return false;
    if (!seen.insert(label).second) return false;
    if (f < 0 || f >= be.embedding.flag_count) return false;
    if (least_of_vertex(be.embedding, f) != f) return false;
  }
  return true;
}

int label_at(const BoundariedEmbedding& be, Flag f) {
  auto it = be.labels.find(least_of_vertex(be.embedding, f));
  return it == be.labels.end() ? 0 : it->second;
}

std::vector<int> used_labels(const BoundariedEmbedding& be) {
  std::vector<int> out;
  out.reserve(be.labels.size());
  for (auto [f, label] : be.labels) out.push_back(label);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// ordered sigma pair as traversed by a directed vertex cycle
using Block = std::pair<Flag, Flag>;

// vertex cycle from seed decomposed into sigma blocks, in walk order
std::vector<Block> vertex_blocks(const Embedding& e, Flag seed) {
  std::vector<Flag> walk = directed_object_orbit(e, ObjectKind::vertex, seed);
  std::vector<Block> blocks;
  blocks.reserve(walk.size() / 2);
  for (size_t i = 0; i < walk.size(); i += 2)
    blocks.emplace_back(walk[i], walk[i + 1]);
  return blocks;
}

// all cyclic block sequences whose restriction to either input reproduces
// it; the first block of `a` is pinned as the rotation representative
void shuffles(const std::vector<Block>& a, size_t ai,
              const std::vector<Block>& b, size_t bi,
              std::vector<Block>& acc,
              std::set<std::vector<Block>>& out) {
  if (ai == a.size() && bi == b.size()) {
    out.insert(acc);
    return;
  }
  if (ai < a.size()) {
    acc.push_back(a[ai]);
    shuffles(a, ai + 1, b, bi, acc, out);
    acc.pop_back();
  }
  if (bi < b.size()) {
    acc.push_back(b[bi]);
    shuffles(a, ai, b, bi + 1, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<Block>> cycle_interleavings(
    const std::vector<Block>& a, const std::vector<Block>& b) {
  std::set<std::vector<Block>> unique;
  std::vector<Block> dir = b;
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t r = 0; r < dir.size(); ++r) {
      std::vector<Block> rot(dir.begin() + r, dir.end());
      rot.insert(rot.end(), dir.begin(), dir.begin() + r);
      std::vector<Block> tail(a.begin() + 1, a.end());
      std::vector<Block> acc{a[0]};
      shuffles(tail, 0, rot, 0, acc, unique);
    }
    std::reverse(dir.begin(), dir.end());
    for (Block& blk : dir) std::swap(blk.first, blk.second);
  }
  return {unique.begin(), unique.end()};
}

void apply_block_cycle(std::vector<Flag>& phi, const std::vector<Block>& seq) {
  const size_t k = seq.size();
  for (size_t i = 0; i < k; ++i) {
    Flag tail = seq[i].second;
    Flag head = seq[(i + 1) % k].first;
    phi[tail] = head;
    phi[head] = tail;
  }
}

struct MergePlan {
  Embedding base;                       // disjoint union
  std::vector<std::vector<std::vector<Block>>> choices;  // per shared label
  std::vector<std::pair<int, Flag>> kept;  // (label, flag in union) to re-seat
  int capacity = 0;
};

MergePlan plan_merges(const BoundariedEmbedding& e1,
                      const BoundariedEmbedding& e2) {
  if (e1.capacity != e2.capacity)
    throw std::invalid_argument("merge_all: label capacities differ");
  MergePlan plan;
  plan.capacity = e1.capacity;
  const int off = e1.embedding.flag_count;
  const int n = off + e2.embedding.flag_count;

  plan.base.flag_count = n;
  std::vector<Flag> theta(n), sigma(n), phi(n);
  for (Flag f = 0; f < off; ++f) {
    theta[f] = e1.embedding.theta(f);
    sigma[f] = e1.embedding.sigma(f);
    phi[f] = e1.embedding.phi(f);
  }
  for (Flag f = off; f < n; ++f) {
    theta[f] = e2.embedding.theta(f - off) + off;
    sigma[f] = e2.embedding.sigma(f - off) + off;
    phi[f] = e2.embedding.phi(f - off) + off;
  }
  plan.base.theta = Involution(std::move(theta));
  plan.base.sigma = Involution(std::move(sigma));
  plan.base.phi = Involution(std::move(phi));

  std::map<int, Flag> by_label_2;
  for (auto [f, label] : e2.labels) by_label_2[label] = f + off;

  for (auto [f1, label] : e1.labels) {
    auto it = by_label_2.find(label);
    if (it == by_label_2.end()) {
      plan.kept.emplace_back(label, f1);
      continue;
    }
    std::vector<Block> blocks1 = vertex_blocks(plan.base, f1);
    std::vector<Block> blocks2 = vertex_blocks(plan.base, it->second);
    plan.choices.push_back(cycle_interleavings(blocks1, blocks2));
    plan.kept.emplace_back(label, f1);
    by_label_2.erase(it);
  }
  for (auto [label, f2] : by_label_2) plan.kept.emplace_back(label, f2);
  return plan;
}

BoundariedEmbedding realize(const MergePlan& plan,
                            const std::vector<size_t>& pick) {
  BoundariedEmbedding out;
  out.capacity = plan.capacity;
  out.embedding = plan.base;
  std::vector<Flag>& phi = out.embedding.phi.table();
  for (size_t i = 0; i < pick.size(); ++i)
    apply_block_cycle(phi, plan.choices[i][pick[i]]);
  for (auto [label, f] : plan.kept)
    out.labels[least_of_vertex(out.embedding, f)] = label;
  return out;
}

template <typename Fn>
void for_each_merge(const BoundariedEmbedding& e1,
                    const BoundariedEmbedding& e2, Fn&& fn) {
  MergePlan plan = plan_merges(e1, e2);
  std::vector<size_t> pick(plan.choices.size(), 0);
  while (true) {
    fn(realize(plan, pick));
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == plan.choices[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
}

}  // namespace

std::vector<BoundariedEmbedding> merge_all(const BoundariedEmbedding& e1,
                                           const BoundariedEmbedding& e2) {
  std::map<CanonicalKey, BoundariedEmbedding> unique;
  for_each_merge(e1, e2, [&](BoundariedEmbedding merged) {
    CanonicalKey key = canonical_key(merged);
    unique.emplace(std::move(key), std::move(merged));
  });
  std::vector<BoundariedEmbedding> out;
  out.reserve(unique.size());
  for (auto& [key, be] : unique) out.push_back(std::move(be));
  return out;
}

int genus_min_merge(const BoundariedEmbedding& e1,
                    const BoundariedEmbedding& e2) {
  int best = -1;
  for_each_merge(e1, e2, [&](const BoundariedEmbedding& merged) {
    int g = euler_genus(merged.embedding);
    if (best == -1 || g < best) best = g;
  });
  return best;
}

BoundariedEmbedding delete_edge_b(const BoundariedEmbedding& be,
                                  Flag edge_flag) {
  EdgeDeletion del = delete_edge(be.embedding, edge_flag);
  BoundariedEmbedding out;
  out.capacity = be.capacity;
  out.embedding = std::move(del.result);
  for (auto [f, label] : be.labels) {
    Flag survivor = -1;
    for (Flag g : directed_object_orbit(be.embedding, ObjectKind::vertex, f)) {
      if (del.new_of_old[g] != -1) {
        survivor = del.new_of_old[g];
        break;
      }
    }
    if (survivor != -1)
      out.labels[least_of_vertex(out.embedding, survivor)] = label;
  }
  return out;
}

BoundariedEmbedding draw_edge_b(const BoundariedEmbedding& be,
                                const Position& pos) {
  using K = Anchor::Kind;
  for (const Anchor* anchor : {&pos.a, &pos.b}) {
    if (anchor->kind != K::bottom_labelled) continue;
    if (anchor->label < 1 || anchor->label > be.capacity)
      throw std::invalid_argument("draw_edge_b: label out of range");
    for (auto [f, label] : be.labels)
      if (label == anchor->label)
        throw std::invalid_argument("draw_edge_b: label already in use");
  }
  if (pos.a.kind == K::bottom_labelled && pos.b.kind == K::bottom_labelled &&
      pos.a.label == pos.b.label)
    throw std::invalid_argument("draw_edge_b: both anchors claim one label");

  const int n = be.embedding.flag_count;
  BoundariedEmbedding out;
  out.capacity = be.capacity;
  out.embedding = draw_edge(be.embedding, pos);
  out.labels = be.labels;  // old least flags survive unchanged
  // the fresh edge may close into a loop on a single new vertex, in which
  // case the end flags n and n+1 share one orbit whose least flag is n
  if (pos.a.kind == K::bottom_labelled)
    out.labels[least_of_vertex(out.embedding, n)] = pos.a.label;
  if (pos.b.kind == K::bottom_labelled)
    out.labels[least_of_vertex(out.embedding, n + 1)] = pos.b.label;
  return out;
}

std::string write_boundaried(const BoundariedEmbedding& be) {
  std::ostringstream out;
  out << write_embedding(be.embedding);
  out << be.capacity << '\n';
  bool first = true;
  for (auto [f, label] : be.labels) {
    if (!first) out << ' ';
    out << label << ' ' << f;
    first = false;
  }
  out << '\n';
  return out.str();
}

BoundariedEmbedding parse_boundaried(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string embedding_text;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("truncated boundaried embedding");
    embedding_text += line;
    embedding_text += '\n';
  }
  BoundariedEmbedding be;
  be.embedding = parse_embedding(embedding_text);
  if (!std::getline(in, line))
    throw std::invalid_argument("missing capacity line");
  be.capacity = std::stoi(line);
  if (!std::getline(in, line)) line.clear();
  std::istringstream pairs(line);
  int label;
  Flag f;
  while (pairs >> label) {
    if (!(pairs >> f))
      throw std::invalid_argument("dangling label in boundaried embedding");
    be.labels[f] = label;
  }
  if (!valid_boundaried(be))
    throw std::invalid_argument("parsed boundaried embedding is invalid");
  return be;
}

}  // namespace gvd
