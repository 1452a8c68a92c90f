// Flag systems for graph embeddings on surfaces.
//
// An embedding is a set of flags F = {0, ..., flag_count-1} together with
// three fixed-point-free involutions theta, sigma, phi.  Geometrically a
// flag is a quarter of an edge: theta swaps the two flags on the same side
// of an edge, sigma swaps the two flags at the same endpoint, and phi walks
// around a vertex to the next edge quarter.  Combinatorial objects are
// orbits of subgroups:
//
//   vertices    <sigma, phi>
//   edges       <theta, sigma>
//   faces       <theta, phi>
//   components  <theta, sigma, phi>
//
// A *graph* embedding additionally requires every <theta, sigma> orbit to
// have exactly 4 flags (theta and sigma commute and share no orbit), so an
// edge with flag x consists of x, x' = sigma(x), y = theta(x), y' = sigma(y).

#ifndef GVD_FLAGS_HPP
#define GVD_FLAGS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gvd {

using Flag = int;

class Involution {
 public:
  Involution() = default;
  explicit Involution(std::vector<Flag> table) : map_(std::move(table)) {}

  // pairs must partition {0, ..., universe-1}; throws std::invalid_argument
  static Involution from_pairs(int universe,
                               const std::vector<std::pair<Flag, Flag>>& pairs);

  int universe() const { return static_cast<int>(map_.size()); }
  Flag operator()(Flag f) const { return map_[f]; }

  // fixed-point-free involution over the whole universe
  bool valid() const;

  // orbit list as (min, max) pairs sorted by first element
  std::vector<std::pair<Flag, Flag>> pairs() const;

  std::vector<Flag>& table() { return map_; }
  const std::vector<Flag>& table() const { return map_; }

  bool operator==(const Involution&) const = default;

 private:
  std::vector<Flag> map_;
};

struct Embedding {
  int flag_count = 0;
  Involution theta;
  Involution sigma;
  Involution phi;

  // three fixed-point-free involutions over the same flag universe
  bool valid_hypergraph() const;
  // additionally every <theta, sigma> orbit has exactly 4 flags
  bool valid_graph() const;

  // {x, x' = sigma(x), y = theta(x), y' = sigma(theta(x))}
  std::array<Flag, 4> edge_flags(Flag x) const;

  bool operator==(const Embedding&) const = default;
};

// A cyclic sequence up to rotation and reversal.  Sequences of length <= 1
// act as the identity permutation and all compare equal.
class Cycle {
 public:
  Cycle() = default;
  static Cycle from_sequence(std::vector<Flag> seq);

  bool is_identity() const { return elems_.empty(); }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(Flag f) const;

  // lexicographically least rotation over both directions; empty if identity
  const std::vector<Flag>& canonical() const { return elems_; }

  bool operator==(const Cycle&) const = default;
  bool operator<(const Cycle& o) const { return elems_ < o.elems_; }

 private:
  std::vector<Flag> elems_;
};

struct OrbitFamily {
  std::vector<std::vector<Flag>> orbits;  // each sorted, sorted by least flag
  std::vector<int> orbit_of;              // flag -> index into orbits

  int count() const { return static_cast<int>(orbits.size()); }
  const std::vector<Flag>& orbit_containing(Flag f) const {
    return orbits[orbit_of[f]];
  }
};

// generators must share the same universe; throws std::invalid_argument
OrbitFamily orbits(const std::vector<const Involution*>& generators,
                   int universe);

OrbitFamily vertex_orbits(const Embedding& e);
OrbitFamily edge_orbits(const Embedding& e);
OrbitFamily face_orbits(const Embedding& e);
OrbitFamily component_orbits(const Embedding& e);

int count_vertices(const Embedding& e);
int count_edges(const Embedding& e);
int count_faces(const Embedding& e);
int count_components(const Embedding& e);

enum class ObjectKind { vertex, edge, face };

// orbit of seed under the object's two generators, as the alternating walk
// seed, a(seed), b(a(seed)), ...; for vertices a = sigma, edges a = theta,
// faces a = theta
std::vector<Flag> directed_object_orbit(const Embedding& e, ObjectKind kind,
                                        Flag seed);
Cycle object_cycle(const Embedding& e, ObjectKind kind, Flag seed);

// |E| - |V| - |F| + 2|cc| for graph embeddings
int euler_genus(const Embedding& e);
// |F|/2 - |V| - |E| - |faces| + 2|cc|; agrees with euler_genus on valid
// graph embeddings and stays defined when only valid_hypergraph() holds
int hypergraph_genus(const Embedding& e);

// keep only flags in `keep`, in induced cyclic order
Cycle restrict_cycle(const Cycle& c, const std::vector<Flag>& keep);

// true iff flags can be 2-colored so every theta/sigma/phi orbit is
// bichromatic
bool check_orientable(const Embedding& e);

// line 1: flag count, lines 2-4: flattened orbit pairs of theta, sigma, phi
std::string write_embedding(const Embedding& e);
Embedding parse_embedding(const std::string& text);  // throws on malformed input

}  // namespace gvd

#endif
