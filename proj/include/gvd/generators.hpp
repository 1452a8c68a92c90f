// Deterministic graph families used by tests and benchmarks.

#ifndef GVD_GENERATORS_HPP
#define GVD_GENERATORS_HPP

#include <cstdint>

#include "gvd/graph.hpp"

namespace gvd {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph grid(int rows, int cols);

// brick-wall pattern with max degree 3; planar
Graph wall(int side);

// ell copies of K5 minus an edge, the removed edge's endpoints of copy i
// being v_i and w_i, plus an apex v adjacent to every v_i and an apex w
// adjacent to every w_i; 5*ell + 2 vertices and 11*ell edges
Graph b_ell(int ell);

// connected graph with the exact edge count, reproducible per seed
Graph random_connected(int n, int m, std::uint64_t seed);

}  // namespace gvd

#endif
