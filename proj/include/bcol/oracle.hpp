#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bcol/exact.hpp"
#include "bcol/graph.hpp"

namespace bcol {

// spectrum straight from the definition, trying every assignment of every
// color count; shares nothing with the search code so it can referee it
std::vector<int> spectrum_bruteforce(const Graph& g, int max_n = 7);

// adjacency bits of the smallest relabeling, the isomorphism class key
uint64_t canonical_bits(const Graph& g);

// one representative per isomorphism class on exactly n vertices
std::vector<Graph> nonisomorphic_graphs(int n);

struct RelationsReport {
    ChiResult chi_left, chi_right;
    ChibResult chib_left, chib_right;
    ChiResult chi_product, chi_left_blowup, chi_complete_right;
    ChibResult chib_product, chib_left_blowup, chib_complete_right;
    SpectrumReport right_spectrum, product_spectrum;
    std::map<int, SpectrumReport> blowup_spectra;  // x -> spectrum of g[K_x]
    Tri lower_bound_chain = Tri::Unknown;  // chib g[h] >= chib g[K_p] >= p*q = chib K_q[h]
    Tri coloring_chain = Tri::Unknown;     // chi g[h] = chi g[K_x] <= x*y = chi K_y[h] <= p*q
    Tri spectrum_containment = Tri::Unknown;  // union of blowup spectra inside the product's
    std::string detail;
};

// the three relations tying a product's numbers to its blowup surrogates;
// any undecided ingredient degrades the clause to Unknown, never to a pass
RelationsReport check_relations(const Graph& g, const Graph& h, Budget budget = {});

}  // namespace bcol
