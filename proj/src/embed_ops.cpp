#include "gvd/embed_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace gvd {

namespace {

void check_flag(const Embedding& e, Flag f, const char* what) {
  if (f < 0 || f >= e.flag_count) throw std::invalid_argument(what);
}

// make {u, v} and {phi(u), phi(v)} orbits of phi, replacing {u, phi(u)} and
// {v, phi(v)}; no-op when u, v are already partners
void pair_up(std::vector<Flag>& phi, Flag u, Flag v) {
  if (phi[u] == v) return;
  Flag pu = phi[u];
  Flag pv = phi[v];
  phi[u] = v;
  phi[v] = u;
  phi[pu] = pv;
  phi[pv] = pu;
}

}  // namespace

EdgeDeletion delete_edge(const Embedding& e, Flag edge_flag) {
  check_flag(e, edge_flag, "delete_edge: flag out of range");
  const Flag x = edge_flag;
  const Flag xp = e.sigma(x);
  const Flag y = e.theta(x);
  const Flag yp = e.sigma(y);

  std::vector<Flag> phi = e.phi.table();
  pair_up(phi, x, xp);
  pair_up(phi, y, yp);

  EdgeDeletion out;
  out.new_of_old.assign(e.flag_count, -1);
  int next = 0;
  for (Flag f = 0; f < e.flag_count; ++f) {
    if (f == x || f == xp || f == y || f == yp) continue;
    out.new_of_old[f] = next++;
  }

  std::vector<Flag> ntheta(next), nsigma(next), nphi(next);
  for (Flag f = 0; f < e.flag_count; ++f) {
    Flag nf = out.new_of_old[f];
    if (nf == -1) continue;
    ntheta[nf] = out.new_of_old[e.theta(f)];
    nsigma[nf] = out.new_of_old[e.sigma(f)];
    nphi[nf] = out.new_of_old[phi[f]];
  }
  out.result.flag_count = next;
  out.result.theta = Involution(std::move(ntheta));
  out.result.sigma = Involution(std::move(nsigma));
  out.result.phi = Involution(std::move(nphi));
  return out;
}

Position position(const Embedding& e, Flag x) {
  check_flag(e, x, "position: flag out of range");
  const Flag xp = e.sigma(x);
  const Flag y = e.theta(x);
  const Flag yp = e.sigma(y);

  Flag raw_a = e.phi(x);
  Flag raw_b;
  if (e.phi(y) != x && e.phi(y) != xp) {
    raw_b = e.phi(y);
  } else {
    raw_b = e.phi(e.sigma(e.phi(y)));
  }

  Position p;
  if (raw_a == xp)
    p.a = Anchor::bottom();
  else if (raw_a == y)
    p.a = Anchor::top();
  else if (raw_a == yp)
    p.a = Anchor::top_prime();
  else
    p.a = Anchor::at(raw_a);

  if (raw_b == yp)
    p.b = Anchor::bottom();
  else
    p.b = Anchor::at(raw_b);
  return p;
}

Embedding draw_edge(const Embedding& e, const Position& pos) {
  using K = Anchor::Kind;
  if (pos.b.kind == K::top || pos.b.kind == K::top_prime)
    throw std::invalid_argument("draw_edge: b anchor cannot be top or top'");
  if (pos.a.concrete()) check_flag(e, pos.a.flag, "draw_edge: a flag out of range");
  if (pos.b.concrete()) check_flag(e, pos.b.flag, "draw_edge: b flag out of range");

  const int n = e.flag_count;
  const Flag x = n, y = n + 1, yp = n + 2, xp = n + 3;

  Embedding out;
  out.flag_count = n + 4;
  std::vector<Flag> theta = e.theta.table();
  std::vector<Flag> sigma = e.sigma.table();
  std::vector<Flag> phi = e.phi.table();
  theta.resize(n + 4);
  sigma.resize(n + 4);
  phi.resize(n + 4);
  theta[x] = y;
  theta[y] = x;
  theta[xp] = yp;
  theta[yp] = xp;
  sigma[x] = xp;
  sigma[xp] = x;
  sigma[y] = yp;
  sigma[yp] = y;
  phi[x] = xp;
  phi[xp] = x;
  phi[y] = yp;
  phi[yp] = y;

  Flag a;
  switch (pos.a.kind) {
    case K::flag: a = pos.a.flag; break;
    case K::bottom: case K::bottom_labelled: a = xp; break;
    case K::top: a = y; break;
    case K::top_prime: a = yp; break;
    default: throw std::invalid_argument("draw_edge: bad a anchor");
  }
  Flag b = pos.b.concrete() ? pos.b.flag : yp;

  if (b != yp) {
    Flag bp = phi[b];
    phi[y] = b;
    phi[b] = y;
    phi[yp] = bp;
    phi[bp] = yp;
  }
  if (a != xp) {
    Flag ap = phi[a];
    phi[x] = a;
    phi[a] = x;
    phi[xp] = ap;
    phi[ap] = xp;
  }

  out.theta = Involution(std::move(theta));
  out.sigma = Involution(std::move(sigma));
  out.phi = Involution(std::move(phi));
  return out;
}

bool is_drawn_along_boundary(const Embedding& e, const Position& pos) {
  if (!pos.a.concrete() || !pos.b.concrete()) return false;
  const Flag a = pos.a.flag;
  const Flag b = pos.b.flag;
  check_flag(e, a, "is_drawn_along_boundary: a out of range");
  check_flag(e, b, "is_drawn_along_boundary: b out of range");
  if (a == b) return false;

  // walk a, theta(a), ...; the step closing the cycle back into a is a
  // phi step, so in walk order prev(a) = phi(a) already holds
  std::vector<Flag> walk = directed_object_orbit(e, ObjectKind::face, a);
  const int len = static_cast<int>(walk.size());
  int bi = -1;
  for (int i = 0; i < len; ++i)
    if (walk[i] == b) { bi = i; break; }
  if (bi == -1) return false;

  if (walk[(bi + 1) % len] == e.phi(b)) return true;
  // reversed direction: prev(a) = phi(a) needs theta(a) = phi(a) there
  if (e.theta(a) == e.phi(a) && walk[(bi + len - 1) % len] == e.phi(b))
    return true;
  return false;
}

}  // namespace gvd
