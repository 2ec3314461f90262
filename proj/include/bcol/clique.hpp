#pragma once

#include <cstdint>
#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

struct CliqueResult {
    bool exact = true;  // false when the node budget ran out
    int size = 0;
    std::vector<int> witness;
    uint64_t nodes = 0;
};

CliqueResult max_clique(const Graph& g, uint64_t max_nodes = 50'000'000);

// throws when the search could not finish
int clique_number(const Graph& g);

}  // namespace bcol
