#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/exact.hpp"
#include "bcol/graph.hpp"

namespace bcol {

struct ChordalDescentResult {
    Coloring coloring;        // b-coloring of g[h] with one color fewer
    std::vector<int> order;   // elimination order used, first removed first
    int break_index = 0;      // shortest removed prefix whose suffix fails
    int lost_color = 0;       // class drained from the suffix
    int witness_copy = -1;    // base vertex holding its stranded dominators
    int replacement_color = 0;
    int spare_color = 0;
    // back-filled prefix vertices with the colors given to their copies
    std::vector<std::pair<int, std::vector<int>>> backfill;
};

// one k -> k-1 step on g[h] for chordal g, valid while k exceeds
// |V(h)| * omega(g); throws invalid_argument when it does not apply
ChordalDescentResult descend_chordal_product(const Graph& g, const Graph& h, const Coloring& psi);

struct KlDescendResult {
    Outcome outcome = Outcome::Unknown;
    Coloring coloring;  // set when outcome == Found
    int copy = -1;      // lowest copy carrying more than chi(h) colors
    int kprime = 0;     // how many colors that copy carried
    std::string detail;
    uint64_t nodes = 0;
};

// one k -> k-1 step on K_ell[h]: shrink the busiest copy by exact search;
// needs k > ell * chi(h), Unknown when the within-copy search cannot decide
KlDescendResult descend_complete_left(int ell, const Graph& h, const Coloring& psi,
                                      Budget budget = {});

struct CorollaryReport {
    int inner_size = 0;      // |V(h)|
    ChiResult chi_left;      // chi(g)
    ChibResult chib_right;   // t = chi_b(h)
    ChibResult chib_blowup;  // chi_b(g[K_t])
    SpectrumReport product;  // full spectrum of g[h]
    Tri interval_covered = Tri::Unknown;  // [|V(h)|*chi(g), chi_b(g[h])] inside the spectrum
    Tri gap_empty = Tri::Unknown;         // open range (chi_b(g[K_t]), |V(h)|*chi(g)) holds no integer
    std::string detail;
};

// cross-checks the interval guarantees for chordal g against exact search
CorollaryReport check_final_corollary(const Graph& g, const Graph& h, Budget budget = {});

}  // namespace bcol
