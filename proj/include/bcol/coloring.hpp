#pragma once

#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

// colors are 1..k
struct Coloring {
    int k = 0;
    std::vector<int> color;
};

struct ProperCheck {
    bool ok = true;
    int u = -1, v = -1;  // offending edge when not ok
};

// throws invalid_argument on malformed input (size mismatch, color out of range)
ProperCheck check_proper(const Graph& g, const Coloring& c);

struct BCheck {
    bool ok = false;
    bool proper = false;
    int bad_u = -1, bad_v = -1;
    std::vector<int> b_vertex;  // index c: witness seeing all other colors, or -1
    std::vector<int> missing;   // colors without witness
};

// b-coloring: proper, every class nonempty, every class has a vertex
// adjacent to all other color classes
BCheck check_b_coloring(const Graph& g, const Coloring& c);

// relaxed variant: class `exempt` may be empty and needs no witness; every
// other class needs a vertex seeing every color outside {exempt, own}
BCheck check_miss1_b(const Graph& g, const Coloring& c, int exempt);

// renumber colors by first occurrence; k becomes the number of used colors
Coloring canonical_renumber(const Coloring& c);

// drop a class that has no witness in check_b_coloring's sense: recolor each
// member to the smallest color absent from its neighborhood, shift colors
// above victim down; throws if the class does have a witness
Coloring eliminate_colorless_class(const Graph& g, const Coloring& c, int victim);

// saturation-first greedy; upper bound for the chromatic number
Coloring dsatur_coloring(const Graph& g);

}  // namespace bcol
