#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bcol/coloring.hpp"
#include "bcol/generators.hpp"

using namespace bcol;

TEST_CASE("proper check") {
    Graph g = path(4);
    CHECK(check_proper(g, {2, {1, 2, 1, 2}}).ok);
    ProperCheck bad = check_proper(g, {2, {1, 1, 2, 1}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.u == 0);
    CHECK(bad.v == 1);
    CHECK_THROWS_AS(check_proper(g, {2, {1, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(check_proper(g, {2, {1, 2, 3, 1}}), std::invalid_argument);
}

TEST_CASE("b-coloring check accepts and rejects") {
    Graph g = path(4);
    BCheck ok = check_b_coloring(g, {2, {1, 2, 1, 2}});
    CHECK(ok.ok);
    CHECK(ok.proper);
    CHECK(ok.b_vertex.size() == 3);  // slot per color, index 0 unused
    // 3 colors on a path of 4: middle classes cannot all dominate
    BCheck no = check_b_coloring(g, {3, {1, 2, 3, 1}});
    CHECK_FALSE(no.ok);
    CHECK(no.proper);
    CHECK(no.missing == std::vector<int>{1});
    // an empty class fails
    BCheck empty = check_b_coloring(complete(2), {3, {1, 2}});
    CHECK_FALSE(empty.ok);
}

TEST_CASE("relaxed check lets one class float") {
    Graph g = path(4);
    Coloring c{3, {1, 2, 3, 1}};
    CHECK_FALSE(check_b_coloring(g, c).ok);
    CHECK(check_miss1_b(g, c, 1).ok);   // class 1 excused
    // the excused color drops out of the domination demand too,
    // so excusing 2 lets vertex 3 witness class 1
    CHECK(check_miss1_b(g, c, 2).ok);
    CHECK_FALSE(check_miss1_b(g, {3, {1, 2, 3, 2}}, 2).ok);
    // excused class may be empty entirely
    CHECK(check_miss1_b(complete(2), {3, {2, 3}}, 1).ok);
}

TEST_CASE("renumber by first appearance") {
    Coloring c{3, {3, 1, 3, 2}};
    Coloring r = canonical_renumber(c);
    CHECK(r.k == 3);
    CHECK(r.color == std::vector<int>{1, 2, 1, 3});
}

TEST_CASE("dropping a witness-less class") {
    Graph g = path(4);
    Coloring c{3, {1, 2, 3, 1}};
    // class 1 has no dominating vertex, so it may be dissolved
    Coloring out = eliminate_colorless_class(g, c, 1);
    CHECK(out.k == 2);
    CHECK(check_b_coloring(g, out).ok);
    // class 3 is witnessed by the third vertex, dropping it is refused
    CHECK_THROWS_AS(eliminate_colorless_class(g, c, 3), std::invalid_argument);
}

TEST_CASE("greedy coloring is proper and tight on easy graphs") {
    for (uint32_t s = 0; s < 12; ++s) {
        Graph g = random_gnp(3 + int(s % 8), 20 + int(s * 17 % 61), 9 + s);
        Coloring c = dsatur_coloring(g);
        CHECK(check_proper(g, c).ok);
        CHECK(c.k <= g.max_degree() + 1);
    }
    CHECK(dsatur_coloring(complete(5)).k == 5);
    CHECK(dsatur_coloring(crown(4)).k == 2);
}
