#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "bcol/bitset.hpp"
#include "bcol/chordal.hpp"
#include "bcol/clique.hpp"
#include "bcol/dimacs.hpp"
#include "bcol/generators.hpp"
#include "bcol/graph.hpp"

using namespace bcol;

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.get(64));
    CHECK_FALSE(b.get(63));
    CHECK(b.first() == 0);
    CHECK(b.next(0) == 64);
    CHECK(b.next(64) == 129);
    CHECK(b.next(129) == -1);
    Bitset c(130);
    c.set(64);
    CHECK(c.subset_of(b));
    CHECK(c.intersects(b));
    b -= c;
    CHECK_FALSE(b.get(64));
    CHECK(b.to_vector() == std::vector<int>{0, 129});
}

TEST_CASE("graph accessors") {
    Graph g = path(4);
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.deg(1) == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.neighbor_list(1) == std::vector<int>{0, 2});
    CHECK(g.connected());
    Graph co = g.complement();
    CHECK(co.m() == 6 - 3);
    CHECK(co.has_edge(0, 3));
    CHECK_FALSE(co.has_edge(0, 1));
    CHECK(complete(3).is_clique({0, 1, 2}));
    CHECK(path(4).is_stable({0, 2}));
    CHECK(complete(3).same_structure(cycle(3)));
}

TEST_CASE("induced subgraph keeps sorted order") {
    Graph g = path(4);
    Graph h = g.induced({2, 0, 3});  // sorted to 0,2,3
    CHECK(h.n() == 3);
    CHECK(h.m() == 1);
    CHECK(h.has_edge(1, 2));
    CHECK_FALSE(h.has_edge(0, 1));
}

TEST_CASE("degree bound on known graphs") {
    CHECK(m_degree(complete(5)) == 5);
    CHECK(m_degree(path(4)) == 2);
    CHECK(m_degree(cycle(4)) == 3);
    CHECK(m_degree(crown(4)) == 4);
    CHECK(m_degree(pivoted_tree()) == 4);
}

TEST_CASE("generator shapes") {
    CHECK(crown(4).n() == 8);
    CHECK(crown(4).m() == 12);
    CHECK_THROWS_AS(crown(1), std::invalid_argument);
    CHECK(hypercube(3).n() == 8);
    CHECK(hypercube(3).m() == 12);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    Graph t = pivoted_tree();
    CHECK(t.n() == 11);
    CHECK(t.m() == 10);
    CHECK(t.connected());
    CHECK(t.deg(2) == 2);  // the pivot keeps both slots free
    Graph s = spider(3, false);
    CHECK(s.n() == 6);
    for (int i = 0; i < 3; ++i) CHECK(s.deg(3 + i) == 1);
    Graph st = spider(3, true);
    for (int i = 0; i < 3; ++i) CHECK(st.deg(3 + i) == 2);
}

TEST_CASE("random families meet their class") {
    for (uint32_t s = 0; s < 20; ++s) {
        Graph g = random_chordal(2 + int(s % 9), s);
        CHECK(check_chordal(g).chordal);
    }
}

TEST_CASE("chordality check both ways") {
    CHECK(check_chordal(path(6)).chordal);
    CHECK(check_chordal(complete(4)).chordal);
    ChordalityResult r = check_chordal(cycle(4));
    CHECK_FALSE(r.chordal);
    CHECK(r.hole.size() == 4);
    ChordalityResult r6 = check_chordal(cycle(6));
    CHECK_FALSE(r6.chordal);
    CHECK(r6.hole.size() >= 4);
    for (size_t i = 0; i < r6.hole.size(); ++i) {
        int a = r6.hole[i], b = r6.hole[(i + 1) % r6.hole.size()];
        CHECK(cycle(6).has_edge(a, b));
    }
}

TEST_CASE("elimination orders verify") {
    for (uint32_t s = 0; s < 10; ++s) {
        Graph g = random_chordal(3 + int(s % 7), 100 + s);
        std::vector<int> order = mcs_order(g);
        CHECK(verify_peo(g, order));
        CHECK(clique_number_chordal(g, order) == clique_number(g));
    }
    CHECK_FALSE(verify_peo(cycle(4), mcs_order(cycle(4))));
}

TEST_CASE("clique search on known graphs") {
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(crown(4)) == 2);
    CHECK(clique_number(cycle(5)) == 2);
    CliqueResult r = max_clique(complete(4));
    CHECK(r.size == 4);
    CHECK(r.witness.size() == 4);
    CHECK(complete(4).is_clique(r.witness));
}

TEST_CASE("dimacs round trip") {
    for (const Graph& g : {path(5), crown(3), hypercube(3), random_gnp(9, 40, 7)}) {
        std::ostringstream out;
        write_dimacs(out, g);
        std::istringstream in(out.str());
        Graph back = read_dimacs(in);
        REQUIRE(back.n() == g.n());
        CHECK(back.same_structure(g));
    }
}

TEST_CASE("dimacs rejects malformed input") {
    std::istringstream bad1("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(read_dimacs(bad1), ParseError);
    std::istringstream bad2("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(bad2), ParseError);
    try {
        std::istringstream bad3("p edge 2 1\ne 1 3\n");
        read_dimacs(bad3);
        FAIL("out of range vertex accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}
