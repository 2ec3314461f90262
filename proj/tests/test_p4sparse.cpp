#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "bcol/exact.hpp"
#include "bcol/generators.hpp"
#include "bcol/lexprod.hpp"
#include "bcol/oracle.hpp"
#include "bcol/p4sparse.hpp"

using namespace bcol;

namespace {

Graph join_one(const Graph& g) {
    // fresh vertex adjacent to everything, placed last
    Graph out(g.n() + 1);
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out.add_edge(u, v);
        out.add_edge(u, g.n());
    }
    return out;
}

Graph with_head(const Graph& s, int c) {
    // head vertex adjacent to the clique half only, the first c vertices
    Graph out(s.n() + 1);
    for (int u = 0; u < s.n(); ++u)
        for (int v = u + 1; v < s.n(); ++v)
            if (s.has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < c; ++u) out.add_edge(u, s.n());
    return out;
}

Graph disjoint(const Graph& a, const Graph& b) {
    Graph out(a.n() + b.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.has_edge(u, v)) out.add_edge(u, v);
    for (int u = 0; u < b.n(); ++u)
        for (int v = u + 1; v < b.n(); ++v)
            if (b.has_edge(u, v)) out.add_edge(a.n() + u, a.n() + v);
    return out;
}

}  // namespace

TEST_CASE("class membership") {
    CHECK(is_p4_sparse(path(4)).ok);
    CHECK(is_p4_sparse(complete(6)).ok);
    CHECK(is_p4_sparse(spider(4, true)).ok);
    CHECK(is_p4_sparse(join_one(path(4))).ok);
    P4SparseCheck c5 = is_p4_sparse(cycle(5));
    CHECK_FALSE(c5.ok);
    P4SparseCheck p5 = is_p4_sparse(path(5));
    CHECK_FALSE(p5.ok);
    // the witness really does hold two P4s
    std::vector<int> w(p5.witness.begin(), p5.witness.end());
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<int>{0, 1, 2, 3, 4});
    for (uint32_t s = 0; s < 15; ++s) CHECK(is_p4_sparse(random_p4_sparse(2 + int(s % 8), s)).ok);
}

TEST_CASE("spider split of a path on four vertices") {
    auto p = detect_spider(path(4));
    REQUIRE(p.has_value());
    CHECK_FALSE(p->thick);
    CHECK(p->clique == std::vector<int>{1, 2});
    CHECK(p->stable == std::vector<int>{0, 3});
    CHECK(p->head.empty());
    CHECK(verify_spider(path(4), *p));
}

TEST_CASE("spider split round trips") {
    for (int k : {2, 3, 4}) {
        for (bool thick : {false, true}) {
            Graph s = spider(k, thick);
            auto p = detect_spider(s);
            REQUIRE(p.has_value());
            CHECK(int(p->clique.size()) == k);
            CHECK(int(p->stable.size()) == k);
            CHECK(p->head.empty());
            // a two-pair spider reads as thin either way
            CHECK(p->thick == (thick && k > 2));
            CHECK(verify_spider(s, *p));
            CHECK(std::is_sorted(p->clique.begin(), p->clique.end()));
        }
    }
    Graph headed = with_head(spider(3, false), 3);
    auto q = detect_spider(headed);
    REQUIRE(q.has_value());
    CHECK(q->head == std::vector<int>{6});
    CHECK(verify_spider(headed, *q));
    CHECK_FALSE(verify_spider(headed, SpiderParts{{0, 1}, {3, 4}, {}, false}));
    // a vertex joined to the stable part as well cannot be a head
    CHECK_FALSE(detect_spider(join_one(spider(3, false))).has_value());
}

TEST_CASE("spider split refusals") {
    CHECK_FALSE(detect_spider(cycle(4)).has_value());
    CHECK_FALSE(detect_spider(complete(4)).has_value());
    CHECK_THROWS_AS(detect_spider(complete(1)), std::invalid_argument);
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK_THROWS_AS(detect_spider(two), std::invalid_argument);
}

TEST_CASE("primeval tree shapes") {
    Graph two(4);  // K_2 + K_2
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    PrimevalTree t = primeval_decompose(two);
    REQUIRE(t.root >= 0);
    CHECK(t.nodes[size_t(t.root)].kind == NodeKind::Union);
    std::vector<int> leaves = tree_leaves(t);
    REQUIRE(leaves.size() == 2);
    for (int id : leaves) {
        CHECK(t.nodes[size_t(id)].kind == NodeKind::Leaf);
        CHECK(t.nodes[size_t(id)].leaf == LeafKind::Clique);
    }

    PrimevalTree tp = primeval_decompose(path(4));
    CHECK(tp.nodes[size_t(tp.root)].kind == NodeKind::Leaf);
    CHECK(tp.nodes[size_t(tp.root)].leaf == LeafKind::SpiderBody);

    PrimevalTree tj = primeval_decompose(join_one(path(4)));
    const TreeNode& root = tj.nodes[size_t(tj.root)];
    CHECK(root.kind == NodeKind::Join);
    CHECK(root.verts == std::vector<int>{0, 1, 2, 3, 4});

    PrimevalTree th = primeval_decompose(with_head(spider(3, false), 3));
    const TreeNode& sroot = th.nodes[size_t(th.root)];
    CHECK(sroot.kind == NodeKind::Spider);
    CHECK(th.nodes[size_t(sroot.left)].leaf == LeafKind::SpiderBody);
    CHECK(th.nodes[size_t(sroot.right)].verts == std::vector<int>{6});

    CHECK_THROWS_AS(primeval_decompose(cycle(5)), std::invalid_argument);
}

TEST_CASE("rainbow cliques certify at once") {
    DescendP4Result r = descend_p4sparse(complete(4), 1, {4, {1, 2, 3, 4}});
    CHECK(r.kind == DescendP4Result::Kind::CliqueCertificate);
    CHECK(r.clique.size() == 4);
    CHECK(r.trace.steps.empty());

    DescendP4Result r2 = descend_p4sparse(path(4), 1, {2, {1, 2, 1, 2}});
    CHECK(r2.kind == DescendP4Result::Kind::CliqueCertificate);
    CHECK(r2.clique.size() == 2);
    CHECK(path(4).has_edge(r2.clique[0], r2.clique[1]));
}

TEST_CASE("thick spider bottoms out in a clique certificate") {
    Graph s = spider(4, true);
    ChiResult chi = chromatic_number(s);
    REQUIRE(chi.outcome == Outcome::Found);
    BWitness w = exists_b_coloring(s, chi.value);
    REQUIRE(w.outcome == Outcome::Found);
    DescendP4Result r = descend_p4sparse(s, 1, w.coloring);
    CHECK(r.kind == DescendP4Result::Kind::CliqueCertificate);
    CHECK(int(r.clique.size()) == chi.value);
    CHECK(s.is_clique(r.clique));
}

TEST_CASE("input screening") {
    CHECK_THROWS_AS(descend_p4sparse(path(4), 0, {2, {1, 2, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(descend_p4sparse(path(4), 1, {2, {1, 2, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(descend_p4sparse(path(4), 1, {2, {1, 2, 1, 2}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(descend_p4sparse(cycle(5), 1, {3, {1, 2, 1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("one descent step, any eliminated color") {
    Graph g = disjoint(spider(3, false), spider(3, false));
    ChibResult chib = b_chromatic_number(g);
    REQUIRE(chib.outcome == Outcome::Found);
    ChiResult chi = chromatic_number(g);
    REQUIRE(chib.value > chi.value);
    for (int victim = 1; victim <= chib.value; ++victim) {
        DescendP4Result r = descend_p4sparse(g, 1, chib.witness, victim);
        REQUIRE(r.kind == DescendP4Result::Kind::Colored);
        CHECK(r.coloring.k == chib.value - 1);
        CHECK(check_b_coloring(g, r.coloring).ok);
    }
}

TEST_CASE("descent chains on every small class member") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            if (!is_p4_sparse(g).ok) continue;
            for (int l = 1; l <= 2; ++l) {
                Graph prod = lex_product(g, complete(l));
                ChibResult chib = b_chromatic_number(prod);
                ChiResult chi = chromatic_number(prod);
                REQUIRE(chib.outcome == Outcome::Found);
                REQUIRE(chi.outcome == Outcome::Found);
                Coloring psi = chib.witness;
                for (int k = chib.value; k > chi.value; --k) {
                    DescendP4Result r = descend_p4sparse(g, l, psi);
                    REQUIRE(r.kind == DescendP4Result::Kind::Colored);
                    REQUIRE(check_b_coloring(prod, r.coloring).ok);
                    REQUIRE(r.coloring.k == k - 1);
                    psi = r.coloring;
                }
                if (chi.value >= 2) {
                    DescendP4Result r = descend_p4sparse(g, l, psi);
                    REQUIRE(r.kind == DescendP4Result::Kind::CliqueCertificate);
                    REQUIRE(int(r.clique.size()) == chi.value);
                    REQUIRE(prod.is_clique(r.clique));
                }
            }
        }
    }
}

TEST_CASE("lift replays a trace onto the full product") {
    Graph g = disjoint(spider(3, false), spider(3, false));
    ChibResult chib = b_chromatic_number(g);
    REQUIRE(chib.outcome == Outcome::Found);
    DescendP4Result r = descend_p4sparse(g, 1, chib.witness);
    REQUIRE(r.kind == DescendP4Result::Kind::Colored);
    Coloring lifted = lift_coloring(g, r.trace, r.reduced_coloring);
    CHECK(lifted.color == r.coloring.color);
    Coloring wrong = r.reduced_coloring;
    wrong.color.push_back(1);
    CHECK_THROWS_AS(lift_coloring(g, r.trace, wrong), std::invalid_argument);
}
