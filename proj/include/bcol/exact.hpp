#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"

namespace bcol {

enum class Outcome { Found, None, Unknown };

const char* outcome_name(Outcome o);

// verdict of a checked relation; Unknown when a needed quantity timed out
enum class Tri { True, False, Unknown };

const char* tri_name(Tri t);

struct Budget {
    uint64_t max_nodes = 20'000'000;
};

struct BWitness {
    Outcome outcome = Outcome::Unknown;
    Coloring coloring;  // set when outcome == Found
    uint64_t nodes = 0;
};

// decides whether g has a b-coloring with exactly k colors extending pre
// (empty pre or entries 0 = free, c = pinned); k > 62 is rejected
BWitness exists_b_coloring(const Graph& g, int k, const std::vector<int>& pre = {},
                           Budget budget = {});

struct ChiResult {
    Outcome outcome = Outcome::Unknown;
    int value = 0;
    Coloring witness;
    uint64_t nodes = 0;
};

ChiResult chromatic_number(const Graph& g, Budget budget = {});

struct ChibResult {
    Outcome outcome = Outcome::Unknown;
    int value = 0;
    Coloring witness;
    uint64_t nodes = 0;
};

ChibResult b_chromatic_number(const Graph& g, Budget budget = {});

struct SpectrumReport {
    std::string graph_id;
    int n = 0, m = 0;
    int degree_bound = 0;  // largest k with k vertices of degree >= k-1
    Outcome chi_outcome = Outcome::Unknown;
    int chi = 0;
    Outcome chib_outcome = Outcome::Unknown;
    int chi_b = 0;
    std::vector<int> spectrum;  // k admitting a b-coloring
    std::vector<int> unknown;   // k where the search gave up
    std::optional<bool> continuous;  // spectrum == every integer in [chi, chi_b]
    std::vector<int> gaps;           // certified holes strictly inside the range
    std::map<int, Coloring> witnesses;
};

SpectrumReport b_spectrum(const Graph& g, Budget budget = {}, int jobs = 1);

}  // namespace bcol
