#pragma once

#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> peo;   // elimination order, first vertex eliminated first
    std::vector<int> hole;  // induced chordless cycle (length >= 4) when not chordal
};

// maximum cardinality search; reversed visit order is a perfect elimination
// order exactly when the graph is chordal
std::vector<int> mcs_order(const Graph& g);

// brute pairwise check that every vertex's later neighbors form a clique
bool verify_peo(const Graph& g, const std::vector<int>& order);

// empty result means no chordless cycle of length >= 4 exists
std::vector<int> find_chordless_cycle(const Graph& g);

ChordalityResult check_chordal(const Graph& g);

// clique number from a verified elimination order
int clique_number_chordal(const Graph& g, const std::vector<int>& peo);

}  // namespace bcol
