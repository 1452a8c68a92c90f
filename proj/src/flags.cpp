#include "gvd/flags.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gvd {

Involution Involution::from_pairs(
    int universe, const std::vector<std::pair<Flag, Flag>>& pairs) {
  std::vector<Flag> table(universe, -1);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= universe || b < 0 || b >= universe)
      throw std::invalid_argument("involution pair out of range");
    if (a == b) throw std::invalid_argument("involution pair has a fixed point");
    if (table[a] != -1 || table[b] != -1)
      throw std::invalid_argument("flag appears in two involution pairs");
    table[a] = b;
    table[b] = a;
  }
  for (Flag f = 0; f < universe; ++f)
    if (table[f] == -1) throw std::invalid_argument("flag missing from involution");
  return Involution(std::move(table));
}

bool Involution::valid() const {
  const int n = universe();
  for (Flag f = 0; f < n; ++f) {
    Flag g = map_[f];
    if (g < 0 || g >= n || g == f || map_[g] != f) return false;
  }
  return true;
}

std::vector<std::pair<Flag, Flag>> Involution::pairs() const {
  std::vector<std::pair<Flag, Flag>> out;
  out.reserve(map_.size() / 2);
  for (Flag f = 0; f < universe(); ++f)
    if (f < map_[f]) out.emplace_back(f, map_[f]);
  return out;
}

bool Embedding::valid_hypergraph() const {
  if (flag_count < 0 || flag_count % 2 != 0) return false;
  if (theta.universe() != flag_count || sigma.universe() != flag_count ||
      phi.universe() != flag_count)
    return false;
  return theta.valid() && sigma.valid() && phi.valid();
}

bool Embedding::valid_graph() const {
  if (!valid_hypergraph()) return false;
  for (Flag x = 0; x < flag_count; ++x) {
    if (theta(sigma(x)) != sigma(theta(x))) return false;
    if (theta(x) == sigma(x)) return false;  // shared orbit collapses the edge
  }
  return true;
}

std::array<Flag, 4> Embedding::edge_flags(Flag x) const {
  return {x, sigma(x), theta(x), sigma(theta(x))};
}

Cycle Cycle::from_sequence(std::vector<Flag> seq) {
  Cycle c;
  if (seq.size() <= 1) return c;
  const int k = static_cast<int>(seq.size());
  std::vector<Flag> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < k; ++r) {
      std::vector<Flag> cand(k);
      for (int i = 0; i < k; ++i) cand[i] = seq[(r + i) % k];
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(seq.begin(), seq.end());
  }
  c.elems_ = std::move(best);
  return c;
}

bool Cycle::contains(Flag f) const {
  return std::find(elems_.begin(), elems_.end(), f) != elems_.end();
}

OrbitFamily orbits(const std::vector<const Involution*>& generators,
                   int universe) {
  for (const Involution* g : generators)
    if (g->universe() != universe)
      throw std::invalid_argument("orbit generators over mismatched universes");
  OrbitFamily fam;
  fam.orbit_of.assign(universe, -1);
  for (Flag start = 0; start < universe; ++start) {
    if (fam.orbit_of[start] != -1) continue;
    const int idx = fam.count();
    std::vector<Flag> orbit{start};
    fam.orbit_of[start] = idx;
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (const Involution* g : generators) {
        Flag next = (*g)(orbit[head]);
        if (fam.orbit_of[next] == -1) {
          fam.orbit_of[next] = idx;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    fam.orbits.push_back(std::move(orbit));
  }
  return fam;
}

OrbitFamily vertex_orbits(const Embedding& e) {
  return orbits({&e.sigma, &e.phi}, e.flag_count);
}
OrbitFamily edge_orbits(const Embedding& e) {
  return orbits({&e.theta, &e.sigma}, e.flag_count);
}
OrbitFamily face_orbits(const Embedding& e) {
  return orbits({&e.theta, &e.phi}, e.flag_count);
}
OrbitFamily component_orbits(const Embedding& e) {
  return orbits({&e.theta, &e.sigma, &e.phi}, e.flag_count);
}

namespace {

// orbit count of the group generated by `gens` without materializing orbits
int count_orbits(std::initializer_list<const Involution*> gens, int universe) {
  std::vector<char> seen(universe, 0);
  std::vector<Flag> stack;
  int count = 0;
  for (Flag start = 0; start < universe; ++start) {
    if (seen[start]) continue;
    ++count;
    seen[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (const Involution* g : gens) {
        Flag next = (*g)(f);
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
  }
  return count;
}

}  // namespace

int count_vertices(const Embedding& e) {
  return count_orbits({&e.sigma, &e.phi}, e.flag_count);
}
int count_edges(const Embedding& e) {
  return count_orbits({&e.theta, &e.sigma}, e.flag_count);
}
int count_faces(const Embedding& e) {
  return count_orbits({&e.theta, &e.phi}, e.flag_count);
}
int count_components(const Embedding& e) {
  return count_orbits({&e.theta, &e.sigma, &e.phi}, e.flag_count);
}

std::vector<Flag> directed_object_orbit(const Embedding& e, ObjectKind kind,
                                        Flag seed) {
  if (seed < 0 || seed >= e.flag_count)
    throw std::invalid_argument("orbit seed out of range");
  const Involution* a = nullptr;
  const Involution* b = nullptr;
  switch (kind) {
    case ObjectKind::vertex: a = &e.sigma; b = &e.phi; break;
    case ObjectKind::edge:   a = &e.theta; b = &e.sigma; break;
    case ObjectKind::face:   a = &e.theta; b = &e.phi; break;
  }
  std::vector<Flag> walk{seed};
  Flag cur = seed;
  bool use_a = true;
  while (true) {
    cur = use_a ? (*a)(cur) : (*b)(cur);
    use_a = !use_a;
    if (cur == seed) break;
    walk.push_back(cur);
  }
  return walk;
}

Cycle object_cycle(const Embedding& e, ObjectKind kind, Flag seed) {
  return Cycle::from_sequence(directed_object_orbit(e, kind, seed));
}

int euler_genus(const Embedding& e) {
  return count_edges(e) - count_vertices(e) - count_faces(e) +
         2 * count_components(e);
}

int hypergraph_genus(const Embedding& e) {
  return e.flag_count / 2 - count_vertices(e) - count_edges(e) -
         count_faces(e) + 2 * count_components(e);
}

Cycle restrict_cycle(const Cycle& c, const std::vector<Flag>& keep) {
  std::vector<Flag> sorted_keep = keep;
  std::sort(sorted_keep.begin(), sorted_keep.end());
  std::vector<Flag> kept;
  for (Flag f : c.canonical())
    if (std::binary_search(sorted_keep.begin(), sorted_keep.end(), f))
      kept.push_back(f);
  return Cycle::from_sequence(std::move(kept));
}

bool check_orientable(const Embedding& e) {
  std::vector<int> color(e.flag_count, -1);
  std::vector<Flag> stack;
  for (Flag start = 0; start < e.flag_count; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    stack.assign(1, start);
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (const Involution* g : {&e.theta, &e.sigma, &e.phi}) {
        Flag next = (*g)(f);
        if (color[next] == -1) {
          color[next] = 1 - color[f];
          stack.push_back(next);
        } else if (color[next] == color[f]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void write_pairs(std::ostringstream& out, const Involution& inv) {
  bool first = true;
  for (auto [a, b] : inv.pairs()) {
    if (!first) out << ' ';
    out << a << ' ' << b;
    first = false;
  }
  out << '\n';
}

std::vector<std::pair<Flag, Flag>> read_pairs(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::pair<Flag, Flag>> pairs;
  Flag a, b;
  while (in >> a) {
    if (!(in >> b)) throw std::invalid_argument("odd number of flags in pair list");
    pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace

std::string write_embedding(const Embedding& e) {
  std::ostringstream out;
  out << e.flag_count << '\n';
  write_pairs(out, e.theta);
  write_pairs(out, e.sigma);
  write_pairs(out, e.phi);
  return out.str();
}

Embedding parse_embedding(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty embedding text");
  int flag_count;
  try {
    flag_count = std::stoi(line);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad flag count line");
  }
  if (flag_count < 0 || flag_count % 2 != 0)
    throw std::invalid_argument("flag count must be even and nonnegative");
  Embedding e;
  e.flag_count = flag_count;
  Involution* target[3] = {&e.theta, &e.sigma, &e.phi};
  for (Involution* inv : target) {
    if (!std::getline(in, line))
      throw std::invalid_argument("missing involution line");
    *inv = Involution::from_pairs(flag_count, read_pairs(line));
  }
  return e;
}

}  // namespace gvd
