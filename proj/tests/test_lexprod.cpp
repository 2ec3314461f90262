#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcol/chordal.hpp"
#include "bcol/exact.hpp"
#include "bcol/generators.hpp"
#include "bcol/lexprod.hpp"
#include "bcol/oracle.hpp"

using namespace bcol;

TEST_CASE("product size and adjacency rule") {
    Graph g = path(3), h = cycle(3);
    Graph p = lex_product(g, h);
    CHECK(p.n() == 9);
    // m = m(g)*nh^2 + n(g)*m(h)
    CHECK(p.m() == 2 * 9 + 3 * 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y) {
                    bool want = g.has_edge(u, x) || (u == x && h.has_edge(v, y));
                    int a = prod_index(u, v, 3), b = prod_index(x, y, 3);
                    if (a != b) CHECK(p.has_edge(a, b) == want);
                }
    CHECK(prod_pair(prod_index(2, 1, 3), 3) == std::pair<int, int>{2, 1});
}

TEST_CASE("legend covers every product vertex") {
    std::vector<std::string> lines = pair_legend(2, 3);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "pair 1 1 1");
    CHECK(lines[5] == "pair 6 2 3");
}

TEST_CASE("degree bound scales under clique blowup") {
    for (uint32_t s = 0; s < 25; ++s) {
        Graph g = random_gnp(2 + int(s % 9), 15 + int(s * 11 % 71), s);
        int base = m_degree(g);
        for (int l = 1; l <= 3; ++l)
            CHECK(m_degree(lex_product(g, complete(l))) == l * base);
    }
}

TEST_CASE("clique blowup keeps chordality") {
    for (uint32_t s = 0; s < 15; ++s) {
        Graph g = random_chordal(2 + int(s % 8), 40 + s);
        for (int l = 1; l <= 3; ++l)
            CHECK(check_chordal(lex_product(g, complete(l))).chordal);
    }
}

TEST_CASE("inner factor collapses to a clique of its chromatic size") {
    std::vector<Graph> reps;
    for (int n = 1; n <= 3; ++n)
        for (Graph& g : nonisomorphic_graphs(n)) reps.push_back(std::move(g));
    for (const Graph& g : reps)
        for (const Graph& h : reps) {
            ChiResult ch = chromatic_number(h);
            REQUIRE(ch.outcome == Outcome::Found);
            ChiResult lhs = chromatic_number(lex_product(g, h));
            ChiResult rhs = chromatic_number(lex_product(g, complete(ch.value)));
            REQUIRE(lhs.outcome == Outcome::Found);
            REQUIRE(rhs.outcome == Outcome::Found);
            CHECK(lhs.value == rhs.value);
        }
}

TEST_CASE("complete left factor multiplies the b-chromatic number") {
    std::vector<Graph> rights = {path(3), path(4), cycle(4), complete(3)};
    Graph edgeless(3);
    rights.push_back(edgeless);
    for (const Graph& h : rights) {
        ChibResult base = b_chromatic_number(h);
        REQUIRE(base.outcome == Outcome::Found);
        for (int l = 1; l <= 3; ++l) {
            ChibResult got = b_chromatic_number(lex_product(complete(l), h));
            REQUIRE(got.outcome == Outcome::Found);
            CHECK(got.value == l * base.value);
        }
    }
}
