#pragma once

#include <cstdint>

#include "bcol/graph.hpp"

namespace bcol {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);      // n >= 3
Graph hypercube(int d);  // 2^d vertices, d >= 0
Graph crown(int p);      // K_{p,p} minus a perfect matching, p >= 2

// clique c_0..c_{k-1} plus stable s_0..s_{k-1}; thin: s_i ~ c_i only,
// thick: s_i ~ every c_j except c_i; k >= 2
Graph spider(int k, bool thick);

// tree with six leaves and four branch vertices: degree bound 4, yet no
// 4-color b-coloring exists
Graph pivoted_tree();

Graph random_gnp(int n, int percent, uint32_t seed);
Graph random_chordal(int n, uint32_t seed);
Graph random_p4_sparse(int n, uint32_t seed);

}  // namespace bcol
