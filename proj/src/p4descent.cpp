#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bcol/bitset.hpp"
#include "bcol/coloring.hpp"
#include "bcol/generators.hpp"
#include "bcol/graph.hpp"
#include "bcol/lexprod.hpp"
#include "bcol/p4sparse.hpp"

namespace bcol {

namespace {

// mutable state of one k -> k-1 pass; color 1 is always the one being
// drained, the public palette is restored on the way out
struct Descent {
    const Graph& g;
    int ell;
    int k;
    int elim = 1;
    Graph product;
    std::vector<int> psi;     // internal palette, 0 on removed copies
    std::vector<char> alive;  // per base vertex
    PrimevalTree tree;
    std::vector<int> leaves;
    std::vector<int> rank_memo;
    ReductionTrace trace;

    Descent(const Graph& g_, int ell_, int k_)
        : g(g_), ell(ell_), k(k_), product(lex_product(g_, complete(ell_))),
          psi(product.n(), 0), alive(g_.n(), 1) {}

    int pv(int u, int j) const { return u * ell + j; }

    void rebuild() {
        std::vector<int> verts;
        for (int u = 0; u < g.n(); ++u)
            if (alive[u]) verts.push_back(u);
        tree = primeval_decompose(g, verts);
        leaves = tree_leaves(tree);
        rank_memo.assign(tree.nodes.size(), -1);
    }

    Bitset palette(const std::vector<int>& base) const {
        Bitset out(k + 1);
        for (int u : base) {
            if (!alive[u]) continue;
            for (int j = 0; j < ell; ++j) out.set(psi[pv(u, j)]);
        }
        return out;
    }

    Bitset seen_colors(int x) const {
        Bitset out(k + 1);
        const Bitset& nb = product.neighbors(x);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (psi[w] > 0) out.set(psi[w]);
        return out;
    }

    void swap_colors(const std::vector<int>& base, int a, int b) {
        for (int u : base)
            for (int j = 0; j < ell; ++j) {
                int& c = psi[pv(u, j)];
                if (c == a)
                    c = b;
                else if (c == b)
                    c = a;
            }
    }

    void reduce(ReductionStep step) {
        for (int u : step.removed) {
            alive[u] = 0;
            for (int j = 0; j < ell; ++j) psi[pv(u, j)] = 0;
        }
        trace.steps.push_back(std::move(step));
        rebuild();
    }

    // proper, classes 2..k alive, each with a vertex seeing every color
    // outside {1, own}; class 1 rides along unchecked
    void check_invariant() const {
        for (int x = 0; x < product.n(); ++x) {
            if (psi[x] == 0) continue;
            const Bitset& nb = product.neighbors(x);
            for (int w = nb.next(x); w >= 0; w = nb.next(w))
                if (psi[w] == psi[x]) throw std::logic_error("descent broke properness");
        }
        std::vector<char> present(k + 1, 0);
        for (int x = 0; x < product.n(); ++x)
            if (psi[x] > 0) present[psi[x]] = 1;
        for (int d = 2; d <= k; ++d)
            if (!present[d]) throw std::logic_error("descent emptied a kept class");
        std::vector<char> witnessed(k + 1, 0);
        for (int x = 0; x < product.n(); ++x) {
            int d = psi[x];
            if (d <= 1 || witnessed[d]) continue;
            Bitset seen = seen_colors(x);
            bool ok = true;
            for (int e = 2; e <= k && ok; ++e)
                if (e != d && !seen.get(e)) ok = false;
            if (ok) witnessed[d] = 1;
        }
        for (int d = 2; d <= k; ++d)
            if (!witnessed[d]) throw std::logic_error("descent lost a dominating vertex");
    }

    void subtree_leaves(int id, std::vector<int>& out) const {
        const TreeNode& nd = tree.nodes[id];
        if (nd.kind == NodeKind::Leaf) {
            out.push_back(id);
            return;
        }
        subtree_leaves(nd.left, out);
        subtree_leaves(nd.right, out);
    }

    // 0 everywhere except a clique leaf under a join, which sits one level
    // above everything across the join; orders the color handoffs
    int rank_of(int id, std::vector<char>& onstack) {
        if (rank_memo[id] >= 0) return rank_memo[id];
        if (onstack[id]) throw std::logic_error("leaf rank recursion cycled");
        onstack[id] = 1;
        int r = 0;
        const TreeNode& nd = tree.nodes[id];
        if (nd.kind == NodeKind::Leaf && nd.leaf == LeafKind::Clique && nd.parent >= 0 &&
            tree.nodes[nd.parent].kind == NodeKind::Join) {
            const TreeNode& par = tree.nodes[nd.parent];
            std::vector<int> ls;
            subtree_leaves(par.left == id ? par.right : par.left, ls);
            for (int m : ls) r = std::max(r, 1 + rank_of(m, onstack));
        }
        onstack[id] = 0;
        return rank_memo[id] = r;
    }

    bool leaf_has_one(int id) const {
        for (int u : tree.nodes[id].verts)
            for (int j = 0; j < ell; ++j)
                if (psi[pv(u, j)] == 1) return true;
        return false;
    }

    std::pair<int, std::vector<int>> measure() {
        int cnt = 0;
        for (char a : alive) cnt += a;
        std::vector<int> ranks;
        std::vector<char> onstack(tree.nodes.size(), 0);
        for (int lf : leaves)
            if (leaf_has_one(lf)) ranks.push_back(rank_of(lf, onstack));
        std::sort(ranks.rbegin(), ranks.rend());
        return {cnt, ranks};
    }

    void handle_stable(int lf) {
        const std::vector<int> verts = tree.nodes[lf].verts;
        for (int u : verts) {
            int one = -1;
            for (int j = 0; j < ell; ++j)
                if (psi[pv(u, j)] == 1) {
                    if (one >= 0) throw std::logic_error("two copies of a vertex share a color");
                    one = pv(u, j);
                }
            if (one < 0) continue;
            Bitset leaf_pal = palette(verts);
            Bitset mine = palette({u});
            int c = 0;
            for (int d = 2; d <= k; ++d)
                if (leaf_pal.get(d) && !mine.get(d)) {
                    c = d;
                    break;
                }
            if (c == 0) {
                // u already shows every color of the part, the others only
                // repeat what u keeps alive
                ReductionStep step;
                step.kind = ReductionStep::Kind::StableKeep;
                step.keeper = u;
                for (int v : verts)
                    if (v != u) step.removed.push_back(v);
                reduce(std::move(step));
                return;
            }
            psi[one] = c;
        }
    }

    // vertices whose copies constrain a spider body from outside: nothing
    // above a union or the root, the join sibling, the head when the body
    // hangs under its own spider, the outer clique when it is the head
    std::vector<int> body_context(int lf) const {
        const TreeNode& nd = tree.nodes[lf];
        if (nd.parent < 0) return {};
        const TreeNode& par = tree.nodes[nd.parent];
        switch (par.kind) {
            case NodeKind::Union: return {};
            case NodeKind::Join: return tree.nodes[par.left == lf ? par.right : par.left].verts;
            case NodeKind::Spider:
                if (par.left == lf) return tree.nodes[par.right].verts;
                return tree.nodes[par.left].parts.clique;
            default: throw std::logic_error("leaf hangs under a leaf");
        }
    }

    // recolor every 1 on the stable side into clique colors its copy
    // cannot see; needs 1 absent from the clique side
    void clear_ones_b1(const SpiderParts& parts) {
        std::vector<std::pair<int, int>> feet;  // (stable, partner)
        for (size_t i = 0; i < parts.stable.size(); ++i)
            feet.push_back({parts.stable[i], parts.clique[i]});
        std::sort(feet.begin(), feet.end());
        for (auto [s, partner] : feet)
            for (int j = 0; j < ell; ++j) {
                int x = pv(s, j);
                if (psi[x] != 1) continue;
                std::vector<int> pool;
                if (parts.thick)
                    pool.push_back(partner);
                else
                    for (int c : parts.clique)
                        if (c != partner) pool.push_back(c);
                Bitset cand = palette(pool);
                Bitset bad = seen_colors(x);
                int c = 0;
                for (int d = 2; d <= k; ++d)
                    if (cand.get(d) && !bad.get(d)) {
                        c = d;
                        break;
                    }
                if (c == 0) throw std::logic_error("no spare clique color for a spider foot");
                psi[x] = c;
            }
    }

    void handle_body(int lf) {
        const SpiderParts& parts = tree.nodes[lf].parts;
        Bitset cpal = palette(parts.clique);
        if (!cpal.get(1)) {
            clear_ones_b1(parts);
            return;
        }
        Bitset spal = palette(parts.stable);
        Bitset gpal = palette(body_context(lf));
        int c = 0;
        for (int d = 2; d <= k; ++d)
            if (spal.get(d) && !cpal.get(d) && !gpal.get(d)) {
                c = d;
                break;
            }
        if (c != 0) {
            swap_colors(tree.nodes[lf].verts, 1, c);
            clear_ones_b1(parts);
            return;
        }
        if (cpal.intersects(gpal))
            throw std::logic_error("spider context palette overlaps its clique");
        ReductionStep step;
        step.kind = ReductionStep::Kind::SpiderDropStable;
        step.removed = parts.stable;
        std::sort(step.removed.begin(), step.removed.end());
        reduce(std::move(step));
    }

    void handle_clique(int lf) {
        const TreeNode& nd = tree.nodes[lf];
        int x = -1;
        for (int u : nd.verts)
            for (int j = 0; j < ell; ++j)
                if (psi[pv(u, j)] == 1) {
                    if (x >= 0) throw std::logic_error("clique copies repeat the drained color");
                    x = pv(u, j);
                }
        if (x < 0) throw std::logic_error("selected leaf lost its colored copy");
        if (nd.parent < 0) throw std::logic_error("root clique leaf reached the recolor path");
        const TreeNode& par = tree.nodes[nd.parent];
        if (par.kind == NodeKind::Join) {
            Bitset sp = palette(tree.nodes[par.left == lf ? par.right : par.left].verts);
            int c = 0;
            for (int d = 2; d <= k; ++d)
                if (sp.get(d)) {
                    c = d;
                    break;
                }
            if (c == 0) throw std::logic_error("join sibling shows no color");
            // hand 1 across the join; the old holders of c sit strictly
            // lower in the handoff order
            swap_colors(par.verts, 1, c);
            return;
        }
        std::vector<int> ctx;
        std::vector<int> shield = nd.verts;
        if (par.kind == NodeKind::Union) {
            ctx = tree.nodes[par.left == lf ? par.right : par.left].verts;
        } else {
            if (par.left == lf) throw std::logic_error("spider body claims a clique leaf");
            ctx = tree.nodes[par.left].verts;
            const auto& outer = tree.nodes[par.left].parts.clique;
            shield.insert(shield.end(), outer.begin(), outer.end());
        }
        Bitset cands = palette(ctx);
        Bitset blocked = palette(shield);
        int c = 0;
        for (int d = 2; d <= k; ++d)
            if (cands.get(d) && !blocked.get(d)) {
                c = d;
                break;
            }
        if (c != 0) {
            psi[x] = c;
            return;
        }
        if (par.kind == NodeKind::Union) {
            ReductionStep step;
            step.kind = ReductionStep::Kind::CliqueAbsorbUnion;
            step.removed = tree.nodes[par.left == lf ? par.right : par.left].verts;
            for (int u : nd.verts)
                for (int j = 0; j < ell; ++j)
                    step.keeper_snapshot.push_back({pv(u, j), psi[pv(u, j)]});
            for (int u : step.removed)
                for (int j = 0; j < ell; ++j)
                    step.removed_snapshot.push_back({pv(u, j), psi[pv(u, j)]});
            reduce(std::move(step));
        } else {
            ReductionStep step;
            step.kind = ReductionStep::Kind::CliqueAbsorbSpider;
            step.keeper = nd.verts[0];
            step.removed = tree.nodes[par.left].parts.stable;
            std::sort(step.removed.begin(), step.removed.end());
            reduce(std::move(step));
        }
    }

    int to_final(int c) const {
        int o = c == elim ? 1 : c;
        return o > elim ? o - 1 : o;
    }

    int to_orig(int c) const {
        if (elim == 1) return c;
        if (c == 1) return elim;
        if (c == elim) return 1;
        return c;
    }

    void fill_final_alive() {
        trace.final_alive.clear();
        for (int u = 0; u < g.n(); ++u)
            if (alive[u]) trace.final_alive.push_back(u);
    }

    DescendP4Result finish_certificate() {
        fill_final_alive();
        DescendP4Result out;
        out.kind = DescendP4Result::Kind::CliqueCertificate;
        out.reduced_coloring.k = k;
        std::vector<char> seen(k + 1, 0);
        for (int u : trace.final_alive)
            for (int j = 0; j < ell; ++j) {
                int x = pv(u, j);
                if (psi[x] <= 0) throw std::logic_error("alive copy lost its color");
                if (seen[psi[x]]) throw std::logic_error("certificate repeats a color");
                seen[psi[x]] = 1;
                out.clique.push_back(x);
                out.reduced_coloring.color.push_back(to_orig(psi[x]));
            }
        if (int(out.clique.size()) != k) throw std::logic_error("certificate misses a color");
        for (size_t a = 0; a < out.clique.size(); ++a)
            for (size_t b = a + 1; b < out.clique.size(); ++b)
                if (!product.has_edge(out.clique[a], out.clique[b]))
                    throw std::logic_error("certificate vertices are not pairwise adjacent");
        out.trace = trace;
        return out;
    }

    DescendP4Result finish_colored() {
        fill_final_alive();
        DescendP4Result out;
        out.kind = DescendP4Result::Kind::Colored;
        out.reduced_coloring.k = k - 1;
        std::vector<int> alive_pv;
        for (int u : trace.final_alive)
            for (int j = 0; j < ell; ++j) {
                alive_pv.push_back(pv(u, j));
                out.reduced_coloring.color.push_back(to_final(psi[pv(u, j)]));
            }
        auto chk = check_b_coloring(product.induced(alive_pv), out.reduced_coloring);
        if (!chk.ok) throw std::logic_error("reduced coloring fails its own check");
        out.trace = trace;
        out.coloring = lift_coloring(g, out.trace, out.reduced_coloring);
        auto full = check_b_coloring(product, out.coloring);
        if (!full.ok) throw std::logic_error("lifted coloring fails its own check");
        return out;
    }

    DescendP4Result run() {
        rebuild();
        uint64_t cap = uint64_t(product.n()) * product.n() + product.n() + 100;
        uint64_t steps = 0;
        while (true) {
            if (++steps > cap) throw std::logic_error("descent exceeded its step bound");
            check_invariant();
            bool one = false;
            for (int x = 0; x < product.n() && !one; ++x) one = psi[x] == 1;
            if (!one) break;
            const TreeNode& root = tree.nodes[tree.root];
            if (root.kind == NodeKind::Leaf && root.leaf == LeafKind::Clique)
                return finish_certificate();
            auto before = measure();
            int lf = -1;
            for (int cand : leaves)
                if (leaf_has_one(cand)) {
                    lf = cand;
                    break;
                }
            if (lf < 0) throw std::logic_error("colored copy in no leaf");
            switch (tree.nodes[lf].leaf) {
                case LeafKind::Stable: handle_stable(lf); break;
                case LeafKind::SpiderBody: handle_body(lf); break;
                case LeafKind::Clique: handle_clique(lf); break;
            }
            if (!(measure() < before)) throw std::logic_error("descent measure failed to drop");
        }
        return finish_colored();
    }
};

}  // namespace

DescendP4Result descend_p4sparse(const Graph& g, int ell, const Coloring& psi,
                                 int eliminate_color) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (ell < 1) throw std::invalid_argument("blowup factor must be at least 1");
    if (psi.k < 2) throw std::invalid_argument("descent needs at least two colors");
    if (eliminate_color < 1 || eliminate_color > psi.k)
        throw std::invalid_argument("eliminated color out of range");
    Descent d(g, ell, psi.k);
    if (psi.color.size() != size_t(d.product.n()))
        throw std::invalid_argument("coloring does not fit the product");
    if (!check_b_coloring(d.product, psi).ok)
        throw std::invalid_argument("descent needs a b-coloring to start from");
    d.elim = eliminate_color;
    d.psi = psi.color;
    if (eliminate_color != 1)
        for (int& c : d.psi) {
            if (c == 1)
                c = eliminate_color;
            else if (c == eliminate_color)
                c = 1;
        }
    d.trace.ell = ell;
    return d.run();
}

Coloring lift_coloring(const Graph& g, const ReductionTrace& trace, const Coloring& reduced) {
    if (trace.ell < 1) throw std::invalid_argument("bad blowup factor");
    int n = g.n(), ell = trace.ell;
    Graph product = lex_product(g, complete(ell));
    std::vector<int> owner(n, -1);  // -2 survivor, else step index
    for (int u : trace.final_alive) {
        if (u < 0 || u >= n || owner[u] != -1) throw std::invalid_argument("bad survivor list");
        owner[u] = -2;
    }
    for (size_t i = 0; i < trace.steps.size(); ++i)
        for (int u : trace.steps[i].removed) {
            if (u < 0 || u >= n || owner[u] != -1)
                throw std::invalid_argument("vertex removed twice");
            owner[u] = int(i);
        }
    for (int u = 0; u < n; ++u)
        if (owner[u] == -1) throw std::invalid_argument("vertex neither removed nor surviving");
    if (reduced.k < 1) throw std::invalid_argument("empty palette");
    if (reduced.color.size() != trace.final_alive.size() * size_t(ell))
        throw std::invalid_argument("reduced coloring does not fit the survivors");
    Coloring out;
    out.k = reduced.k;
    out.color.assign(product.n(), 0);
    for (size_t a = 0; a < trace.final_alive.size(); ++a)
        for (int j = 0; j < ell; ++j) {
            int c = reduced.color[a * ell + j];
            if (c < 1 || c > reduced.k) throw std::invalid_argument("color out of range");
            out.color[trace.final_alive[a] * ell + j] = c;
        }
    for (size_t si = trace.steps.size(); si-- > 0;) {
        const ReductionStep& st = trace.steps[si];
        switch (st.kind) {
            case ReductionStep::Kind::StableKeep:
            case ReductionStep::Kind::CliqueAbsorbSpider: {
                if (st.keeper < 0 || st.keeper >= n || out.color[st.keeper * ell] == 0)
                    throw std::invalid_argument("keeper missing or not yet restored");
                for (int u : st.removed)
                    for (int j = 0; j < ell; ++j)
                        out.color[u * ell + j] = out.color[st.keeper * ell + j];
                break;
            }
            case ReductionStep::Kind::CliqueAbsorbUnion: {
                std::map<int, int> relabel;
                for (auto [x, c] : st.keeper_snapshot) {
                    if (x < 0 || x >= product.n() || out.color[x] == 0)
                        throw std::invalid_argument("snapshot names an uncolored keeper copy");
                    relabel[c] = out.color[x];
                }
                for (auto [x, c] : st.removed_snapshot) {
                    if (x < 0 || x >= product.n())
                        throw std::invalid_argument("snapshot out of range");
                    auto it = relabel.find(c);
                    if (it == relabel.end())
                        throw std::invalid_argument("removed copy wore a color the keeper never had");
                    out.color[x] = it->second;
                }
                break;
            }
            case ReductionStep::Kind::SpiderDropStable: {
                std::vector<int> rem = st.removed;
                std::sort(rem.begin(), rem.end());
                for (int u : rem)
                    for (int j = 0; j < ell; ++j) {
                        int x = u * ell + j;
                        Bitset used(out.k + 1);
                        const Bitset& nb = product.neighbors(x);
                        for (int w = nb.first(); w >= 0; w = nb.next(w))
                            if (out.color[w] > 0) used.set(out.color[w]);
                        int c = 0;
                        for (int d = 1; d <= out.k; ++d)
                            if (!used.get(d)) {
                                c = d;
                                break;
                            }
                        if (c == 0)
                            throw std::logic_error("no free color while restoring a spider foot");
                        out.color[x] = c;
                    }
                break;
            }
        }
    }
    for (int x = 0; x < product.n(); ++x)
        if (out.color[x] == 0) throw std::logic_error("lift left a copy uncolored");
    return out;
}

}  // namespace bcol
