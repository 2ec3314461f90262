#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bcol/coloring.hpp"
#include "bcol/exact.hpp"
#include "bcol/generators.hpp"
#include "bcol/lexprod.hpp"
#include "bcol/oracle.hpp"

using namespace bcol;

TEST_CASE("single k searches") {
    CHECK(exists_b_coloring(complete(3), 3).outcome == Outcome::Found);
    CHECK(exists_b_coloring(complete(3), 2).outcome == Outcome::None);
    CHECK(exists_b_coloring(path(5), 3).outcome == Outcome::Found);
    CHECK(exists_b_coloring(crown(4), 3).outcome == Outcome::None);
    BWitness w = exists_b_coloring(crown(4), 4);
    REQUIRE(w.outcome == Outcome::Found);
    CHECK(check_b_coloring(crown(4), w.coloring).ok);
    CHECK_THROWS_AS(exists_b_coloring(path(3), 63), std::invalid_argument);
}

TEST_CASE("pinned colors are honored") {
    Graph g = cycle(5);
    std::vector<int> pre(5, 0);
    pre[0] = 2;
    pre[2] = 3;
    BWitness w = exists_b_coloring(g, 3, pre);
    REQUIRE(w.outcome == Outcome::Found);
    CHECK(w.coloring.color[0] == 2);
    CHECK(w.coloring.color[2] == 3);
    CHECK(check_b_coloring(g, w.coloring).ok);
    // pinning both ends of one edge to the same color is rejected outright
    std::vector<int> clash(5, 0);
    clash[0] = clash[1] = 1;
    CHECK_THROWS_AS(exists_b_coloring(g, 3, clash), std::invalid_argument);
}

TEST_CASE("chromatic numbers of known graphs") {
    CHECK(chromatic_number(complete(5)).value == 5);
    CHECK(chromatic_number(cycle(5)).value == 3);
    CHECK(chromatic_number(crown(4)).value == 2);
    CHECK(chromatic_number(hypercube(3)).value == 2);
    ChiResult r = chromatic_number(cycle(7));
    REQUIRE(r.outcome == Outcome::Found);
    CHECK(r.value == 3);
    CHECK(check_proper(cycle(7), r.witness).ok);
    CHECK(r.witness.k == 3);
}

TEST_CASE("b-chromatic numbers of known graphs") {
    CHECK(b_chromatic_number(path(4)).value == 2);
    CHECK(b_chromatic_number(path(5)).value == 3);
    CHECK(b_chromatic_number(crown(4)).value == 4);
    CHECK(b_chromatic_number(pivoted_tree()).value == 3);
    CHECK(b_chromatic_number(hypercube(3)).value == 4);
    ChibResult r = b_chromatic_number(crown(5));
    REQUIRE(r.outcome == Outcome::Found);
    CHECK(r.value == 5);
    CHECK(check_b_coloring(crown(5), r.witness).ok);
}

TEST_CASE("frozen spectra") {
    SpectrumReport p4 = b_spectrum(path(4));
    CHECK(p4.spectrum == std::vector<int>{2});
    SpectrumReport p5 = b_spectrum(path(5));
    CHECK(p5.spectrum == std::vector<int>{2, 3});
    CHECK(p5.continuous.has_value());
    CHECK(*p5.continuous);
    SpectrumReport cr = b_spectrum(crown(4));
    CHECK(cr.spectrum == std::vector<int>{2, 4});
    CHECK(cr.gaps == std::vector<int>{3});
    REQUIRE(cr.continuous.has_value());
    CHECK_FALSE(*cr.continuous);
    SpectrumReport q3 = b_spectrum(hypercube(3));
    CHECK(q3.spectrum == std::vector<int>{2, 4});
    CHECK(q3.unknown.empty());
    CHECK(b_chromatic_number(lex_product(complete(2), path(4))).value == 4);
}

TEST_CASE("spectrum bounds and witnesses hold together") {
    for (uint32_t s = 0; s < 10; ++s) {
        Graph g = random_gnp(4 + int(s % 5), 25 + int(s * 19 % 51), 31 + s);
        SpectrumReport sp = b_spectrum(g);
        REQUIRE(sp.unknown.empty());
        CHECK(sp.chi <= sp.chi_b);
        CHECK(sp.chi_b <= sp.degree_bound);
        for (int k : sp.spectrum) {
            const Coloring& w = sp.witnesses.at(k);
            CHECK(w.k == k);
            CHECK(check_b_coloring(g, w).ok);
        }
        CHECK(std::is_sorted(sp.spectrum.begin(), sp.spectrum.end()));
    }
}

TEST_CASE("search agrees with plain enumeration") {
    for (int n = 1; n <= 4; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g(n);
            int p = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++p)
                    if (mask >> p & 1) g.add_edge(a, b);
            SpectrumReport sp = b_spectrum(g);
            REQUIRE(sp.unknown.empty());
            CHECK(sp.spectrum == spectrum_bruteforce(g));
        }
    }
    CHECK(spectrum_bruteforce(path(5)) == std::vector<int>{2, 3});
    CHECK(spectrum_bruteforce(cycle(5)) == std::vector<int>{3});
    CHECK(spectrum_bruteforce(hypercube(3), 8) == std::vector<int>{2, 4});
}

TEST_CASE("same answers and witnesses at any thread count") {
    for (const Graph& g : {crown(4), hypercube(3), random_gnp(9, 45, 5)}) {
        SpectrumReport one = b_spectrum(g, {}, 1);
        SpectrumReport par = b_spectrum(g, {}, 4);
        SpectrumReport rerun = b_spectrum(g, {}, 4);
        CHECK(one.spectrum == par.spectrum);
        CHECK(one.unknown == par.unknown);
        REQUIRE(one.witnesses.size() == par.witnesses.size());
        for (const auto& [k, w] : one.witnesses) {
            CHECK(par.witnesses.at(k).color == w.color);
            CHECK(rerun.witnesses.at(k).color == w.color);
        }
    }
}

TEST_CASE("isomorphism class listing") {
    CHECK(nonisomorphic_graphs(1).size() == 1);
    CHECK(nonisomorphic_graphs(2).size() == 2);
    CHECK(nonisomorphic_graphs(3).size() == 4);
    CHECK(nonisomorphic_graphs(4).size() == 11);
    CHECK(nonisomorphic_graphs(6).size() == 156);
    // canonical bits ignore labeling
    Graph a = path(4);
    Graph b(4);
    b.add_edge(2, 0);
    b.add_edge(0, 3);
    b.add_edge(3, 1);
    CHECK(canonical_bits(a) == canonical_bits(b));
    CHECK(canonical_bits(a) != canonical_bits(cycle(4)));
}

TEST_CASE("relation check on decided factors") {
    RelationsReport r = check_relations(path(4), complete(2));
    CHECK(r.lower_bound_chain == Tri::True);
    CHECK(r.coloring_chain == Tri::True);
    CHECK(r.spectrum_containment == Tri::True);
    CHECK(r.detail == "all three relations hold");
    RelationsReport t = check_relations(complete(3), path(3));
    CHECK(t.lower_bound_chain == Tri::True);
    CHECK(t.coloring_chain == Tri::True);
    CHECK(t.spectrum_containment == Tri::True);
    CHECK_THROWS_AS(check_relations(Graph(0), path(3)), std::invalid_argument);
}

TEST_CASE("starved searches degrade to unknown, never to a verdict") {
    RelationsReport r = check_relations(crown(4), complete(2), Budget{1});
    CHECK(r.spectrum_containment != Tri::True);
    CHECK(r.spectrum_containment != Tri::False);
    BWitness w = exists_b_coloring(crown(5), 4, {}, Budget{1});
    CHECK(w.outcome != Outcome::Found);
}
