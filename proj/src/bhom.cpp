#include "bcol/bhom.hpp"

#include <stdexcept>

#include "bcol/lexprod.hpp"

namespace bcol {

BHomCheck check_bhom(const BHomMap& f) {
    BHomCheck r;
    if (int(f.map.size()) != f.source.n()) {
        r.reason = "map size mismatch";
        return r;
    }
    for (int v : f.map)
        if (v < 0 || v >= f.target.n()) {
            r.reason = "image out of range";
            return r;
        }
    for (int u = 0; u < f.source.n(); ++u)
        for (int v = f.source.neighbors(u).next(u); v >= 0; v = f.source.neighbors(u).next(v))
            if (f.map[u] == f.map[v] || !f.target.has_edge(f.map[u], f.map[v])) {
                r.bad_u = u;
                r.bad_v = v;
                r.reason = "edge not preserved";
                return r;
            }
    for (int x = 0; x < f.target.n(); ++x) {
        bool witness = false;
        for (int u = 0; u < f.source.n() && !witness; ++u) {
            if (f.map[u] != x) continue;
            Bitset img(f.target.n());
            for (int w = f.source.neighbors(u).first(); w >= 0;
                 w = f.source.neighbors(u).next(w))
                img.set(f.map[w]);
            if (img == f.target.neighbors(x)) witness = true;
        }
        if (!witness) {
            r.bad_target = x;
            r.reason = "no preimage realizes the neighborhood of " + std::to_string(x);
            return r;
        }
    }
    r.ok = true;
    return r;
}

BHomMap compose(const BHomMap& f, const BHomMap& g) {
    if (!f.target.same_structure(g.source))
        throw std::invalid_argument("middle graphs differ");
    BHomMap h;
    h.source = f.source;
    h.target = g.target;
    h.map.resize(f.map.size());
    for (size_t v = 0; v < f.map.size(); ++v) h.map[v] = g.map[f.map[v]];
    return h;
}

BHomMap lift_inner(const BHomMap& f, const Graph& base) {
    BHomMap out;
    out.source = lex_product(base, f.source);
    out.target = lex_product(base, f.target);
    int ns = f.source.n(), nt = f.target.n();
    out.map.resize(size_t(base.n()) * ns);
    for (int u = 0; u < base.n(); ++u)
        for (int v = 0; v < ns; ++v)
            out.map[prod_index(u, v, ns)] = prod_index(u, f.map[v], nt);
    return out;
}

BHomMap lift_outer(const BHomMap& f, const Graph& inner) {
    BHomMap out;
    out.source = lex_product(f.source, inner);
    out.target = lex_product(f.target, inner);
    int nh = inner.n();
    out.map.resize(size_t(f.source.n()) * nh);
    for (int u = 0; u < f.source.n(); ++u)
        for (int v = 0; v < nh; ++v)
            out.map[prod_index(u, v, nh)] = prod_index(f.map[u], v, nh);
    return out;
}

BHomMap coloring_to_bhom(const Graph& g, const Coloring& c) {
    if (int(c.color.size()) != g.n()) throw std::invalid_argument("coloring size mismatch");
    BHomMap out;
    out.source = g;
    out.target = Graph(c.k);
    for (int a = 0; a < c.k; ++a)
        for (int b = a + 1; b < c.k; ++b) out.target.add_edge(a, b);
    out.map.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (c.color[v] < 1 || c.color[v] > c.k)
            throw std::invalid_argument("color out of range");
        out.map[v] = c.color[v] - 1;
    }
    return out;
}

Coloring bhom_to_coloring(const BHomMap& f) {
    int k = f.target.n();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (!f.target.has_edge(a, b))
                throw std::invalid_argument("target is not complete");
    Coloring c;
    c.k = k;
    c.color.resize(f.map.size());
    for (size_t v = 0; v < f.map.size(); ++v) c.color[v] = f.map[v] + 1;
    return c;
}

}  // namespace bcol
