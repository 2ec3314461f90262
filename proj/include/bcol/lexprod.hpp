#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

// lexicographic product: vertex (u,v) stored at index u*h.n()+v;
// (u,v) ~ (u',v') iff u~u' in g, or u==u' and v~v' in h
Graph lex_product(const Graph& g, const Graph& h);

inline int prod_index(int u, int v, int nh) { return u * nh + v; }
inline std::pair<int, int> prod_pair(int idx, int nh) { return {idx / nh, idx % nh}; }

// per product vertex a "pair P U V" line, all 1-based to match dimacs output
std::vector<std::string> pair_legend(int ng, int nh);

}  // namespace bcol
