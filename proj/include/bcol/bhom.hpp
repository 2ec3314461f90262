#pragma once

#include <string>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"

namespace bcol {

// vertex map between concrete graphs, kept by value so lifts stay self-contained
struct BHomMap {
    Graph source;
    Graph target;
    std::vector<int> map;
};

struct BHomCheck {
    bool ok = false;
    // edge preservation failure
    int bad_u = -1, bad_v = -1;
    // target vertex with no preimage realizing its whole neighborhood
    int bad_target = -1;
    std::string reason;
};

// edge preserving, and every target vertex has a preimage whose neighborhood
// maps onto the target vertex's neighborhood
BHomCheck check_bhom(const BHomMap& f);

// g after f; requires f.target and g.source to be the same graph
BHomMap compose(const BHomMap& f, const BHomMap& g);

// inner lift: base[h_src] -> base[h_dst] via (u,v) -> (u, f(v))
BHomMap lift_inner(const BHomMap& f, const Graph& base);

// outer lift: g_src[inner] -> g_dst[inner] via (u,v) -> (f(u), v)
BHomMap lift_outer(const BHomMap& f, const Graph& inner);

// map onto the complete graph on c.k vertices; a valid b-hom exactly when c
// is a b-coloring
BHomMap coloring_to_bhom(const Graph& g, const Coloring& c);

// inverse direction; target must be complete
Coloring bhom_to_coloring(const BHomMap& f);

}  // namespace bcol
