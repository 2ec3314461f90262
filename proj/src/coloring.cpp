#include "bcol/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcol {

namespace {

void validate(const Graph& g, const Coloring& c) {
    if (int(c.color.size()) != g.n()) throw std::invalid_argument("coloring size mismatch");
    if (c.k < 0) throw std::invalid_argument("negative color count");
    for (int v = 0; v < g.n(); ++v)
        if (c.color[v] < 1 || c.color[v] > c.k)
            throw std::invalid_argument("color out of range at vertex " + std::to_string(v));
}

}  // namespace

ProperCheck check_proper(const Graph& g, const Coloring& c) {
    validate(g, c);
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            if (c.color[u] == c.color[v]) return {false, u, v};
    return {};
}

namespace {

BCheck check_b_core(const Graph& g, const Coloring& c, int exempt) {
    BCheck r;
    ProperCheck p = check_proper(g, c);
    r.proper = p.ok;
    if (!p.ok) {
        r.bad_u = p.u;
        r.bad_v = p.v;
        return r;
    }
    r.b_vertex.assign(c.k + 1, -1);
    for (int v = 0; v < g.n(); ++v) {
        int own = c.color[v];
        if (own == exempt || r.b_vertex[own] != -1) continue;
        Bitset seen(c.k + 1);
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            seen.set(c.color[u]);
        bool all = true;
        for (int d = 1; d <= c.k; ++d)
            if (d != own && d != exempt && !seen.get(d)) { all = false; break; }
        if (all) r.b_vertex[own] = v;
    }
    for (int d = 1; d <= c.k; ++d)
        if (d != exempt && r.b_vertex[d] == -1) r.missing.push_back(d);
    r.ok = r.missing.empty();
    return r;
}

}  // namespace

BCheck check_b_coloring(const Graph& g, const Coloring& c) {
    return check_b_core(g, c, 0);
}

BCheck check_miss1_b(const Graph& g, const Coloring& c, int exempt) {
    if (exempt < 1 || exempt > c.k) throw std::invalid_argument("exempt color out of range");
    return check_b_core(g, c, exempt);
}

Coloring canonical_renumber(const Coloring& c) {
    Coloring out;
    out.color.resize(c.color.size());
    std::vector<int> map(c.k + 1, 0);
    int next = 0;
    for (size_t v = 0; v < c.color.size(); ++v) {
        int d = c.color[v];
        if (d < 1 || d > c.k) throw std::invalid_argument("color out of range");
        if (!map[d]) map[d] = ++next;
        out.color[v] = map[d];
    }
    out.k = next;
    return out;
}

Coloring eliminate_colorless_class(const Graph& g, const Coloring& c, int victim) {
    validate(g, c);
    if (victim < 1 || victim > c.k) throw std::invalid_argument("victim out of range");
    BCheck chk = check_b_core(g, c, 0);
    if (!chk.proper) throw std::invalid_argument("coloring not proper");
    if (chk.b_vertex[victim] != -1)
        throw std::invalid_argument("class still has a dominating member");

    Coloring out = c;
    for (int v = 0; v < g.n(); ++v) {
        if (out.color[v] != victim) continue;
        Bitset seen(c.k + 1);
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            seen.set(out.color[u]);
        int pick = 0;
        for (int d = 1; d <= c.k; ++d)
            if (d != victim && !seen.get(d)) { pick = d; break; }
        if (!pick) throw std::logic_error("member sees every other color");
        out.color[v] = pick;
    }
    for (int& d : out.color)
        if (d > victim) --d;
    out.k = c.k - 1;
    return out;
}

Coloring dsatur_coloring(const Graph& g) {
    int n = g.n();
    Coloring out;
    out.color.assign(n, 0);
    if (n == 0) return out;
    std::vector<Bitset> sat(n, Bitset(n + 2));
    std::vector<int> satc(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (out.color[v]) continue;
            if (best == -1 || satc[v] > satc[best] ||
                (satc[v] == satc[best] && g.deg(v) > g.deg(best)))
                best = v;
        }
        int d = 1;
        while (sat[best].get(d)) ++d;
        out.color[best] = d;
        out.k = std::max(out.k, d);
        for (int u = g.neighbors(best).first(); u >= 0; u = g.neighbors(best).next(u))
            if (!sat[u].get(d)) {
                sat[u].set(d);
                ++satc[u];
            }
    }
    return out;
}

}  // namespace bcol
