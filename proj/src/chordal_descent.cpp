#include "bcol/chordal_descent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bcol/bitset.hpp"
#include "bcol/chordal.hpp"
#include "bcol/generators.hpp"
#include "bcol/lexprod.hpp"

namespace bcol {

namespace {

struct SuffixView {
    const Graph& product;
    const std::vector<int>& pos;  // per base vertex
    int nh;
    int k;

    int base(int x) const { return x / nh; }
    bool inside(int x, int from) const { return pos[base(x)] >= from; }

    Bitset seen(const std::vector<int>& work, int x, int from) const {
        Bitset out(k + 1);
        const Bitset& nb = product.neighbors(x);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (inside(w, from) && work[w] > 0) out.set(work[w]);
        return out;
    }
};

// b-vertices of class c among suffix copies
std::vector<int> class_dominators(const SuffixView& sv, const std::vector<int>& work, int k,
                                  int c, int from) {
    std::vector<int> out;
    for (int x = 0; x < sv.product.n(); ++x) {
        if (!sv.inside(x, from) || work[x] != c) continue;
        Bitset seen = sv.seen(work, x, from);
        bool all = true;
        for (int d = 1; d <= k && all; ++d)
            if (d != c && !seen.get(d)) all = false;
        if (all) out.push_back(x);
    }
    return out;
}

// smallest class of the suffix restriction without a b-vertex, 0 if none
int first_unwitnessed(const SuffixView& sv, const std::vector<int>& work, int k, int from) {
    for (int c = 1; c <= k; ++c)
        if (class_dominators(sv, work, k, c, from).empty()) return c;
    return 0;
}

}  // namespace

ChordalDescentResult descend_chordal_product(const Graph& g, const Graph& h, const Coloring& psi) {
    if (g.n() == 0 || h.n() == 0) throw std::invalid_argument("both factors must be nonempty");
    auto ch = check_chordal(g);
    if (!ch.chordal) throw std::invalid_argument("left factor is not chordal");
    int nh = h.n(), k = psi.k;
    Graph product = lex_product(g, h);
    if (psi.color.size() != size_t(product.n()))
        throw std::invalid_argument("coloring does not fit the product");
    if (!check_b_coloring(product, psi).ok)
        throw std::invalid_argument("descent needs a b-coloring to start from");
    int omega = clique_number_chordal(g, ch.peo);
    if (k <= nh * omega)
        throw std::invalid_argument("needs more colors than the inner size times the clique number");

    ChordalDescentResult out;
    out.order = mcs_order(g);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[out.order[i]] = i;
    SuffixView sv{product, pos, nh, k};
    std::vector<int> work = psi.color;

    // shortest prefix whose removal breaks the b-coloring; the whole graph
    // works and the empty suffix does not, so the scan always lands
    int brk = 0, c = 0;
    for (int t = 1; t <= g.n(); ++t) {
        c = first_unwitnessed(sv, work, k, t);
        if (c != 0) {
            brk = t;
            break;
        }
    }
    if (brk == 0) throw std::logic_error("the empty suffix passed as a b-coloring");
    out.break_index = brk;
    out.lost_color = c;
    int vi = out.order[brk - 1];

    bool survives = false;
    for (int x = 0; x < product.n() && !survives; ++x)
        survives = sv.inside(x, brk) && work[x] == c;
    if (!survives) throw std::logic_error("a whole class sat in one simplicial copy");

    auto doms = class_dominators(sv, work, k, c, brk - 1);
    if (doms.empty()) throw std::logic_error("a class lost its dominators one step early");
    int vj = -1;
    for (int x : doms) {
        int b = sv.base(x);
        if (b == vi) throw std::logic_error("a simplicial copy claims to dominate");
        if (vj == -1) vj = b;
        if (b != vj) throw std::logic_error("stranded dominators spread over two copies");
    }
    if (!g.has_edge(vi, vj)) throw std::logic_error("stranded dominators sit off the cut vertex");
    out.witness_copy = vj;

    // smallest color of vi's copies no neighbor of vj outside vi shows;
    // never c itself, the dominators must change class
    int cp = 0;
    for (int d = 1; d <= k && cp == 0; ++d) {
        if (d == c) continue;
        bool on_vi = false;
        for (int y = 0; y < nh && !on_vi; ++y) on_vi = work[vi * nh + y] == d;
        if (!on_vi) continue;
        bool clash = false;
        for (int x = 0; x < product.n() && !clash; ++x) {
            int b = sv.base(x);
            if (b == vi || b == vj || pos[b] < brk - 1 || !g.has_edge(b, vj)) continue;
            clash = work[x] == d;
        }
        if (!clash) cp = d;
    }
    if (cp == 0) throw std::logic_error("no replacement color for the stranded dominators");
    out.replacement_color = cp;

    // smallest color missing from vi's copies and everything they touch
    int cpp = 0;
    {
        Bitset around(k + 1);
        for (int y = 0; y < nh; ++y) {
            int x = vi * nh + y;
            around.set(work[x]);
            around |= sv.seen(work, x, brk - 1);
        }
        for (int d = 1; d <= k; ++d)
            if (!around.get(d)) {
                cpp = d;
                break;
            }
    }
    if (cpp == 0) throw std::logic_error("no spare color around the cut copy");
    out.spare_color = cpp;

    // simultaneous switch, then drain c from the suffix; holders of c are
    // pairwise non-adjacent, so the greedy pass never blocks itself
    for (int y = 0; y < nh; ++y) {
        int xj = vj * nh + y, xi = vi * nh + y;
        int cj = work[xj], ci = work[xi];
        if (cj == c) work[xj] = cp;
        if (ci == cp) work[xi] = cpp;
    }
    for (int x = 0; x < product.n(); ++x) {
        if (!sv.inside(x, brk - 1) || work[x] != c) continue;
        Bitset seen = sv.seen(work, x, brk - 1);
        int d = 0;
        for (int e = 1; e <= k; ++e)
            if (e != c && !seen.get(e)) {
                d = e;
                break;
            }
        if (d == 0) throw std::logic_error("a drained vertex turned dominant");
        work[x] = d;
    }
    for (int x = 0; x < product.n(); ++x)
        if (sv.inside(x, brk - 1) && work[x] > c) --work[x];

    {
        std::vector<int> sufv;
        for (int x = 0; x < product.n(); ++x)
            if (sv.inside(x, brk - 1)) sufv.push_back(x);
        Coloring suf;
        suf.k = k - 1;
        for (int x : sufv) suf.color.push_back(work[x]);
        if (!check_b_coloring(product.induced(sufv), suf).ok)
            throw std::logic_error("suffix recoloring failed its own check");
    }

    // put the prefix back, most recently removed first; each vertex's later
    // neighbors form a clique, leaving at least nh colors free
    for (int t = brk - 2; t >= 0; --t) {
        int v = out.order[t];
        Bitset used(k + 1);
        for (int w = g.neighbors(v).first(); w >= 0; w = g.neighbors(v).next(w)) {
            if (pos[w] <= t) continue;
            for (int y = 0; y < nh; ++y) used.set(work[w * nh + y]);
        }
        std::vector<int> free;
        for (int d = 1; d <= k - 1; ++d)
            if (!used.get(d)) free.push_back(d);
        if (int(free.size()) < nh) throw std::logic_error("back-fill ran out of colors");
        std::vector<int> given(free.begin(), free.begin() + nh);
        for (int y = 0; y < nh; ++y) work[v * nh + y] = given[y];
        out.backfill.push_back({v, given});
    }

    out.coloring.k = k - 1;
    out.coloring.color = work;
    if (!check_b_coloring(product, out.coloring).ok)
        throw std::logic_error("descended coloring failed its own check");
    return out;
}

KlDescendResult descend_complete_left(int ell, const Graph& h, const Coloring& psi,
                                      Budget budget) {
    if (ell < 1) throw std::invalid_argument("need at least one copy");
    if (h.n() == 0) throw std::invalid_argument("inner factor is empty");
    int nh = h.n(), k = psi.k;
    Graph product = lex_product(complete(ell), h);
    if (psi.color.size() != size_t(product.n()))
        throw std::invalid_argument("coloring does not fit the product");
    if (!check_b_coloring(product, psi).ok)
        throw std::invalid_argument("descent needs a b-coloring to start from");

    KlDescendResult out;
    auto chi = chromatic_number(h, budget);
    out.nodes = chi.nodes;
    if (chi.outcome != Outcome::Found) {
        out.detail = "inner factor chromatic number undecided";
        return out;
    }
    if (k <= ell * chi.value)
        throw std::invalid_argument("no colors above ell times chi of the inner factor");

    // adjacent copies can never share a color, so some copy must overshoot
    // chi(h); take the lowest
    int copy = -1;
    std::vector<int> mine;
    for (int u = 0; u < ell && copy < 0; ++u) {
        std::vector<char> seen(k + 1, 0);
        mine.clear();
        for (int y = 0; y < nh; ++y) {
            int cc = psi.color[u * nh + y];
            if (!seen[cc]) {
                seen[cc] = 1;
                mine.push_back(cc);
            }
        }
        if (int(mine.size()) > chi.value) copy = u;
    }
    if (copy < 0) throw std::logic_error("no copy exceeds chi of the inner factor");
    std::sort(mine.begin(), mine.end());
    int kprime = int(mine.size());
    out.copy = copy;
    out.kprime = kprime;

    // the copy's own palette only occurs inside it, so the restriction is a
    // b-coloring of h in its own right
    std::vector<int> rank(k + 1, 0);
    for (int i = 0; i < kprime; ++i) rank[mine[i]] = i + 1;
    Coloring inner;
    inner.k = kprime;
    for (int y = 0; y < nh; ++y) inner.color.push_back(rank[psi.color[copy * nh + y]]);
    if (!check_b_coloring(h, inner).ok)
        throw std::logic_error("copy restriction is not a b-coloring");

    auto shrunk = exists_b_coloring(h, kprime - 1, {}, budget);
    out.nodes += shrunk.nodes;
    if (shrunk.outcome == Outcome::None) {
        out.detail = "no within-copy reduction exists";
        return out;
    }
    if (shrunk.outcome == Outcome::Unknown) {
        out.detail = "search budget exhausted inside the copy";
        return out;
    }

    // rewrite the copy in its kprime-1 smallest old colors; the dropped one
    // lived nowhere else, so the whole palette compresses by one
    int dropped = mine[kprime - 1];
    Coloring next;
    next.k = k - 1;
    next.color = psi.color;
    for (int y = 0; y < nh; ++y) next.color[copy * nh + y] = mine[shrunk.coloring.color[y] - 1];
    for (int& cc : next.color)
        if (cc > dropped) --cc;
    if (!check_b_coloring(product, next).ok)
        throw std::logic_error("rewritten product coloring failed its own check");
    out.outcome = Outcome::Found;
    out.coloring = std::move(next);
    out.detail = "reduced inside one copy";
    return out;
}

CorollaryReport check_final_corollary(const Graph& g, const Graph& h, Budget budget) {
    if (g.n() == 0 || h.n() == 0) throw std::invalid_argument("both factors must be nonempty");
    if (!check_chordal(g).chordal) throw std::invalid_argument("left factor is not chordal");
    CorollaryReport rep;
    rep.inner_size = h.n();
    rep.chi_left = chromatic_number(g, budget);
    rep.chib_right = b_chromatic_number(h, budget);
    rep.product = b_spectrum(lex_product(g, h), budget);
    if (rep.chib_right.outcome == Outcome::Found)
        rep.chib_blowup = b_chromatic_number(lex_product(g, complete(rep.chib_right.value)), budget);

    std::string note;
    if (rep.chi_left.outcome == Outcome::Found && rep.product.chib_outcome == Outcome::Found) {
        int lo = rep.inner_size * rep.chi_left.value;
        int hi = rep.product.chi_b;
        if (lo > hi) {
            rep.interval_covered = Tri::True;
            note += "interval empty; ";
        } else {
            rep.interval_covered = Tri::True;
            for (int kk = lo; kk <= hi; ++kk) {
                bool in = std::binary_search(rep.product.spectrum.begin(),
                                             rep.product.spectrum.end(), kk);
                bool open = std::binary_search(rep.product.unknown.begin(),
                                               rep.product.unknown.end(), kk);
                if (in) continue;
                rep.interval_covered = open ? Tri::Unknown : Tri::False;
                note += "k=" + std::to_string(kk) + (open ? " undecided; " : " missing; ");
                break;
            }
        }
    }
    if (rep.chi_left.outcome == Outcome::Found && rep.chib_blowup.outcome == Outcome::Found) {
        int a = rep.chib_blowup.value;
        int b = rep.inner_size * rep.chi_left.value;
        rep.gap_empty = a >= b - 1 ? Tri::True : Tri::False;
        if (rep.gap_empty == Tri::False)
            note += "suspect gap holds " + std::to_string(b - 1 - a) + " integer(s); ";
    }
    if (rep.product.continuous.has_value())
        note += rep.product.continuous.value() ? "product is b-continuous" : "product has a gap";
    rep.detail = note;
    return rep;
}

}  // namespace bcol
