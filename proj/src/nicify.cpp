#include "gvd/nicify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gvd {

namespace {

std::vector<char> labelled_flags(const BoundariedEmbedding& be,
                                 const OrbitFamily& verts) {
  std::vector<char> mark(be.embedding.flag_count, 0);
  for (auto [f, label] : be.labels)
    for (Flag g : verts.orbit_containing(f)) mark[g] = 1;
  return mark;
}

}  // namespace

bool is_nice(const BoundariedEmbedding& be, NiceViolation* out) {
  const Embedding& e = be.embedding;
  OrbitFamily verts = vertex_orbits(e);
  OrbitFamily comps = component_orbits(e);
  std::vector<char> labelled = labelled_flags(be, verts);

  for (const std::vector<Flag>& v : verts.orbits) {
    if (v.size() >= 6 || labelled[v[0]]) continue;
    if (comps.orbit_containing(v[0]).size() != v.size()) {
      if (out) *out = {NiceViolation::Kind::small_vertex, v[0], -1, -1};
      return false;
    }
  }

  OrbitFamily faces = face_orbits(e);
  for (Flag x = 0; x < e.flag_count; ++x) {
    // visit each (edge, face side) once, from its least flag
    Flag y = e.theta(x);
    if (std::min(x, y) != x) continue;
    if (faces.orbit_of[x] == faces.orbit_of[e.sigma(x)]) continue;
    const std::vector<Flag>& face = faces.orbit_containing(x);
    bool covered = false;
    for (Flag z : face) {
      if (z == x || z == y || z == e.phi(x) || z == e.phi(y)) continue;
      if (labelled[z]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      if (out) *out = {NiceViolation::Kind::edge_face, -1, x, x};
      return false;
    }
  }
  if (out) *out = {};
  return true;
}

namespace {

bool is_size2_unlabelled(const BoundariedEmbedding& be, Flag f) {
  const Embedding& e = be.embedding;
  if (e.phi(f) != e.sigma(f)) return false;
  return be.labels.find(std::min(f, e.sigma(f))) == be.labels.end();
}

}  // namespace

BoundariedEmbedding simplify_delete_size2(const BoundariedEmbedding& be,
                                          Flag edge_flag) {
  const Embedding& e = be.embedding;
  bool eligible = false;
  for (Flag f : e.edge_flags(edge_flag))
    if (is_size2_unlabelled(be, f)) eligible = true;
  if (!eligible)
    throw std::invalid_argument(
        "simplify_delete_size2: no unlabelled size-2 endpoint");
  return delete_edge_b(be, edge_flag);
}

BoundariedEmbedding simplify_delete_two_faced(const BoundariedEmbedding& be,
                                              Flag edge_flag) {
  const Embedding& e = be.embedding;
  OrbitFamily faces = face_orbits(e);
  if (faces.orbit_of[edge_flag] == faces.orbit_of[e.sigma(edge_flag)])
    throw std::invalid_argument(
        "simplify_delete_two_faced: edge touches a single face");
  OrbitFamily verts = vertex_orbits(e);
  std::vector<char> labelled = labelled_flags(be, verts);
  const Flag x = edge_flag;
  const Flag y = e.theta(x);
  for (Flag z : faces.orbit_containing(x)) {
    if (z == x || z == y || z == e.phi(x) || z == e.phi(y)) continue;
    if (labelled[z])
      throw std::invalid_argument(
          "simplify_delete_two_faced: face is covered by a labelled vertex");
  }
  return delete_edge_b(be, edge_flag);
}

BoundariedEmbedding simplify_suppress4(const BoundariedEmbedding& be,
                                       Flag vertex_flag) {
  const Embedding& e = be.embedding;
  std::vector<Flag> orbit =
      directed_object_orbit(e, ObjectKind::vertex, vertex_flag);
  if (orbit.size() != 4)
    throw std::invalid_argument("simplify_suppress4: vertex is not size 4");
  Flag least = *std::min_element(orbit.begin(), orbit.end());
  if (be.labels.count(least))
    throw std::invalid_argument("simplify_suppress4: vertex is labelled");

  const Flag x1 = least;
  const Flag x2 = e.phi(x1);
  const Flag y1 = e.theta(x1);
  const Flag y2 = e.theta(x2);
  // the vertex is isolated exactly when its single edge's flags coincide
  // with its own, i.e. theta stays inside the orbit
  if (std::find(orbit.begin(), orbit.end(), y1) != orbit.end())
    throw std::invalid_argument("simplify_suppress4: vertex is isolated");

  std::vector<Flag> theta = e.theta.table();
  theta[y1] = y2;
  theta[y2] = y1;
  theta[e.sigma(y1)] = e.sigma(y2);
  theta[e.sigma(y2)] = e.sigma(y1);

  std::vector<Flag> rename(e.flag_count, -1);
  int next = 0;
  std::set<Flag> gone(orbit.begin(), orbit.end());
  for (Flag f = 0; f < e.flag_count; ++f)
    if (!gone.count(f)) rename[f] = next++;

  BoundariedEmbedding out;
  out.capacity = be.capacity;
  out.embedding.flag_count = next;
  std::vector<Flag> ntheta(next), nsigma(next), nphi(next);
  for (Flag f = 0; f < e.flag_count; ++f) {
    if (rename[f] == -1) continue;
    ntheta[rename[f]] = rename[theta[f]];
    nsigma[rename[f]] = rename[e.sigma(f)];
    nphi[rename[f]] = rename[e.phi(f)];
  }
  out.embedding.theta = Involution(std::move(ntheta));
  out.embedding.sigma = Involution(std::move(nsigma));
  out.embedding.phi = Involution(std::move(nphi));
  // dense renaming is monotone, so least flags map to least flags
  for (auto [f, label] : be.labels) out.labels[rename[f]] = label;
  return out;
}

namespace {

// lowest flag whose vertex is an unlabelled size-2 endpoint, or -1
Flag find_size2(const BoundariedEmbedding& be) {
  for (Flag f = 0; f < be.embedding.flag_count; ++f)
    if (is_size2_unlabelled(be, f)) return f;
  return -1;
}

Flag find_uncovered_two_faced(const BoundariedEmbedding& be) {
  const Embedding& e = be.embedding;
  OrbitFamily faces = face_orbits(e);
  OrbitFamily verts = vertex_orbits(e);
  std::vector<char> labelled = labelled_flags(be, verts);
  for (Flag x = 0; x < e.flag_count; ++x) {
    if (faces.orbit_of[x] == faces.orbit_of[e.sigma(x)]) continue;
    const Flag y = e.theta(x);
    bool covered = false;
    for (Flag z : faces.orbit_containing(x)) {
      if (z == x || z == y || z == e.phi(x) || z == e.phi(y)) continue;
      if (labelled[z]) {
        covered = true;
        break;
      }
    }
    if (!covered) return x;
  }
  return -1;
}

Flag find_suppressible(const BoundariedEmbedding& be) {
  const Embedding& e = be.embedding;
  OrbitFamily verts = vertex_orbits(e);
  OrbitFamily comps = component_orbits(e);
  std::vector<char> labelled = labelled_flags(be, verts);
  for (Flag f = 0; f < e.flag_count; ++f) {
    const std::vector<Flag>& v = verts.orbit_containing(f);
    if (v.size() != 4 || labelled[f]) continue;
    if (comps.orbit_containing(f).size() == 4) continue;
    return v[0];
  }
  return -1;
}

}  // namespace

BoundariedEmbedding make_nice(const BoundariedEmbedding& be) {
  BoundariedEmbedding cur = be;
  while (!is_nice(cur)) {
    Flag f = find_size2(cur);
    if (f != -1) {
      cur = delete_edge_b(cur, f);
      continue;
    }
    f = find_uncovered_two_faced(cur);
    if (f != -1) {
      cur = delete_edge_b(cur, f);
      continue;
    }
    f = find_suppressible(cur);
    if (f != -1) {
      cur = simplify_suppress4(cur, f);
      continue;
    }
    throw std::logic_error("make_nice: not nice but no simplification applies");
  }
  const int bound = nice_flag_bound(
      cur.capacity, std::max(0, euler_genus(cur.embedding)));
  if (cur.embedding.flag_count > bound)
    throw std::logic_error("make_nice: nice embedding exceeds the flag bound");
  return cur;
}

int nice_flag_bound(int label_capacity, int genus) {
  return 48 * label_capacity + 24 * genus;
}

namespace {

void append_u32(std::string& out, int v) {
  unsigned u = static_cast<unsigned>(v);
  out.push_back(static_cast<char>((u >> 24) & 0xff));
  out.push_back(static_cast<char>((u >> 16) & 0xff));
  out.push_back(static_cast<char>((u >> 8) & 0xff));
  out.push_back(static_cast<char>(u & 0xff));
}

// minimal BFS relabelling of one component, over all start flags
std::vector<int> component_encoding(const BoundariedEmbedding& be,
                                    const std::vector<Flag>& comp,
                                    const std::vector<int>& flag_label) {
  const Embedding& e = be.embedding;
  const int s = static_cast<int>(comp.size());
  std::vector<int> best;
  std::vector<int> id(e.flag_count);
  std::vector<Flag> order(s);
  for (Flag start : comp) {
    for (Flag f : comp) id[f] = -1;
    id[start] = 0;
    order[0] = start;
    int found = 1;
    for (int head = 0; head < found; ++head) {
      Flag f = order[head];
      for (const Involution* g : {&e.theta, &e.sigma, &e.phi}) {
        Flag next = (*g)(f);
        if (id[next] == -1) {
          id[next] = found;
          order[found++] = next;
        }
      }
    }
    std::vector<int> enc;
    enc.reserve(1 + 4 * s);
    enc.push_back(s);
    for (const Involution* g : {&e.theta, &e.sigma, &e.phi})
      for (int i = 0; i < s; ++i) enc.push_back(id[(*g)(order[i])]);
    for (int i = 0; i < s; ++i) enc.push_back(flag_label[order[i]]);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace

CanonicalKey canonical_key(const BoundariedEmbedding& be) {
  const Embedding& e = be.embedding;
  OrbitFamily verts = vertex_orbits(e);
  std::vector<int> flag_label(e.flag_count, 0);
  for (auto [f, label] : be.labels)
    for (Flag g : verts.orbit_containing(f)) flag_label[g] = label;

  OrbitFamily comps = component_orbits(e);
  std::vector<std::string> parts;
  parts.reserve(comps.count());
  for (const std::vector<Flag>& comp : comps.orbits) {
    std::string bytes;
    for (int v : component_encoding(be, comp, flag_label))
      append_u32(bytes, v);
    parts.push_back(std::move(bytes));
  }
  std::sort(parts.begin(), parts.end());

  CanonicalKey key;
  append_u32(key.bytes, e.flag_count);
  append_u32(key.bytes, comps.count());
  for (const std::string& p : parts) key.bytes += p;
  return key;
}

std::vector<BoundariedEmbedding> enumerate_nice(int label_capacity,
                                                int genus_bound,
                                                bool orientable_only,
                                                const EnumerateLimits& limits) {
  if (label_capacity < 0 || genus_bound < 0)
    throw std::invalid_argument("enumerate_nice: negative parameter");
  int flag_bound = nice_flag_bound(label_capacity, genus_bound);
  if (limits.max_flags >= 0) flag_bound = std::min(flag_bound, limits.max_flags);

  BoundariedEmbedding empty;
  empty.capacity = label_capacity;

  std::set<CanonicalKey> seen{canonical_key(empty)};
  std::map<CanonicalKey, BoundariedEmbedding> nice;
  if (is_nice(empty)) nice.emplace(canonical_key(empty), empty);

  std::vector<BoundariedEmbedding> frontier{empty};
  long long states = 1;

  while (!frontier.empty()) {
    std::map<CanonicalKey, BoundariedEmbedding> next;
    for (const BoundariedEmbedding& cur : frontier) {
      if (cur.embedding.flag_count + 4 > flag_bound) continue;

      std::vector<int> free_labels;
      {
        std::set<int> used;
        for (auto [f, label] : cur.labels) used.insert(label);
        for (int l = 1; l <= label_capacity; ++l)
          if (!used.count(l)) free_labels.push_back(l);
      }

      std::vector<Anchor> as, bs;
      for (Flag f = 0; f < cur.embedding.flag_count; ++f) {
        as.push_back(Anchor::at(f));
        bs.push_back(Anchor::at(f));
      }
      as.push_back(Anchor::bottom());
      as.push_back(Anchor::top());
      as.push_back(Anchor::top_prime());
      bs.push_back(Anchor::bottom());
      for (int l : free_labels) {
        as.push_back(Anchor::bottom_labelled(l));
        bs.push_back(Anchor::bottom_labelled(l));
      }

      for (const Anchor& a : as) {
        for (const Anchor& b : bs) {
          if (a.kind == Anchor::Kind::bottom_labelled &&
              b.kind == Anchor::Kind::bottom_labelled && a.label == b.label)
            continue;
          BoundariedEmbedding grown = draw_edge_b(cur, {a, b});
          if (euler_genus(grown.embedding) > genus_bound) continue;
          if (orientable_only && !check_orientable(grown.embedding)) continue;
          CanonicalKey key = canonical_key(grown);
          if (!seen.insert(key).second) continue;
          if (++states > limits.max_states)
            throw std::runtime_error("enumerate_nice: state limit exceeded");
          if (is_nice(grown)) nice.emplace(key, grown);
          next.emplace(std::move(key), std::move(grown));
        }
      }
    }
    frontier.clear();
    frontier.reserve(next.size());
    for (auto& [key, be] : next) frontier.push_back(std::move(be));
  }

  std::vector<BoundariedEmbedding> out;
  out.reserve(nice.size());
  for (auto& [key, be] : nice) out.push_back(std::move(be));
  return out;
}

}  // namespace gvd
