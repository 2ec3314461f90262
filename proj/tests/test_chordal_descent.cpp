#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcol/chordal.hpp"
#include "bcol/chordal_descent.hpp"
#include "bcol/coloring.hpp"
#include "bcol/exact.hpp"
#include "bcol/generators.hpp"
#include "bcol/lexprod.hpp"

using namespace bcol;

TEST_CASE("tree spectrum walks down one color") {
    Graph t = pivoted_tree();
    SpectrumReport sp = b_spectrum(t);
    REQUIRE(sp.spectrum == std::vector<int>{2, 3});
    ChordalDescentResult r = descend_chordal_product(t, complete(1), sp.witnesses.at(3));
    CHECK(r.coloring.k == 2);
    CHECK(check_b_coloring(t, r.coloring).ok);
    CHECK(r.lost_color >= 1);
    CHECK(r.break_index >= 1);
    CHECK(int(r.order.size()) == t.n());
}

TEST_CASE("tree blowup descends from five colors") {
    Graph t = pivoted_tree();
    Graph prod = lex_product(t, complete(2));
    BWitness w = exists_b_coloring(prod, 5);
    REQUIRE(w.outcome == Outcome::Found);
    ChordalDescentResult r = descend_chordal_product(t, complete(2), w.coloring);
    CHECK(r.coloring.k == 4);
    CHECK(check_b_coloring(prod, r.coloring).ok);
}

TEST_CASE("randomized chordal products descend everywhere above the floor") {
    // random chordal graphs tend to be dense, so throw in paths to make
    // sure the sweep actually exercises the above-floor branch
    std::vector<Graph> pool;
    for (uint32_t s = 0; s < 12; ++s) pool.push_back(random_chordal(3 + int(s % 6), 123 + s));
    pool.push_back(path(5));
    pool.push_back(path(6));
    pool.push_back(path(7));
    int descents = 0;
    for (const Graph& g : pool) {
        int omega = clique_number_chordal(g, mcs_order(g));
        for (const Graph& h : {complete(1), complete(2), path(3)}) {
            Graph prod = lex_product(g, h);
            SpectrumReport sp = b_spectrum(prod);
            REQUIRE(sp.unknown.empty());
            for (int k : sp.spectrum) {
                if (k <= h.n() * omega) continue;
                ChordalDescentResult r = descend_chordal_product(g, h, sp.witnesses.at(k));
                REQUIRE(r.coloring.k == k - 1);
                REQUIRE(check_b_coloring(prod, r.coloring).ok);
                ++descents;
            }
        }
    }
    CHECK(descents > 0);
}

TEST_CASE("chordal descent refusals") {
    // too few colors for the floor
    CHECK_THROWS_AS(descend_chordal_product(complete(2), complete(2), {4, {1, 2, 3, 4}}),
                    std::invalid_argument);
    // left factor must be chordal
    CHECK_THROWS_AS(descend_chordal_product(cycle(4), complete(1), {2, {1, 2, 1, 2}}),
                    std::invalid_argument);
    // must start from a b-coloring
    CHECK_THROWS_AS(descend_chordal_product(path(3), complete(2), {6, {1, 2, 3, 4, 5, 6}}),
                    std::invalid_argument);
}

TEST_CASE("complete left factor, full interval walk") {
    for (const Graph& h : {path(4), path(5), cycle(5)}) {
        ChiResult chi = chromatic_number(h);
        ChibResult chib = b_chromatic_number(h);
        REQUIRE(chi.outcome == Outcome::Found);
        REQUIRE(chib.outcome == Outcome::Found);
        for (int l = 1; l <= 3; ++l) {
            Graph prod = lex_product(complete(l), h);
            SpectrumReport sp = b_spectrum(prod);
            REQUIRE(sp.unknown.empty());
            CHECK(sp.chi_b == l * chib.value);
            for (int k : sp.spectrum) {
                if (k <= l * chi.value) continue;
                KlDescendResult r = descend_complete_left(l, h, sp.witnesses.at(k));
                REQUIRE(r.outcome == Outcome::Found);
                CHECK(r.coloring.k == k - 1);
                CHECK(check_b_coloring(prod, r.coloring).ok);
                CHECK(r.kprime > chi.value);
            }
        }
    }
}

TEST_CASE("complete left factor refusals and stalls") {
    // six rainbow colors on K_3[K_2] sit exactly at the floor
    CHECK_THROWS_AS(descend_complete_left(3, complete(2), {6, {1, 2, 3, 4, 5, 6}}),
                    std::invalid_argument);
    Graph prod = lex_product(complete(2), path(4));
    BWitness w = exists_b_coloring(prod, 4);
    REQUIRE(w.outcome == Outcome::Found);
    CHECK_THROWS_AS(descend_complete_left(2, path(4), w.coloring), std::invalid_argument);
    // a starved budget reports unknown with its reason
    Graph c = crown(4);
    BWitness wb = exists_b_coloring(c, 4);
    REQUIRE(wb.outcome == Outcome::Found);
    KlDescendResult r = descend_complete_left(1, c, wb.coloring, Budget{1});
    CHECK(r.outcome == Outcome::Unknown);
    CHECK_FALSE(r.detail.empty());
}

TEST_CASE("interval guarantees on a small chordal pair") {
    CorollaryReport r = check_final_corollary(path(4), path(3));
    CHECK(r.inner_size == 3);
    REQUIRE(r.chi_left.outcome == Outcome::Found);
    CHECK(r.chi_left.value == 2);
    REQUIRE(r.chib_right.outcome == Outcome::Found);
    CHECK(r.chib_right.value == 2);
    CHECK(r.interval_covered == Tri::True);
    CHECK(r.gap_empty != Tri::Unknown);
    CHECK_FALSE(r.detail.empty());
    CHECK_THROWS_AS(check_final_corollary(cycle(4), path(3)), std::invalid_argument);
}
