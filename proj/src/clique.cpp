#include "bcol/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcol {

namespace {

struct Searcher {
    const Graph& g;
    uint64_t budget;
    CliqueResult res;
    std::vector<int> cur;

    explicit Searcher(const Graph& g_, uint64_t b) : g(g_), budget(b) {}

    // candidates sorted into greedy color classes; returns parallel bound array
    void color_sort(const std::vector<int>& cand, std::vector<int>& out,
                    std::vector<int>& bound) {
        out.clear();
        bound.clear();
        std::vector<int> left = cand;
        int color = 0;
        while (!left.empty()) {
            ++color;
            std::vector<int> rest;
            std::vector<int> cls;
            for (int v : left) {
                bool clash = false;
                for (int u : cls)
                    if (g.has_edge(u, v)) { clash = true; break; }
                if (clash) rest.push_back(v);
                else cls.push_back(v);
            }
            for (int v : cls) {
                out.push_back(v);
                bound.push_back(color);
            }
            left.swap(rest);
        }
    }

    void expand(std::vector<int> cand) {
        if (++res.nodes > budget) {
            res.exact = false;
            return;
        }
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (int(cur.size()) + bound[i] <= res.size) return;
            int v = order[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.has_edge(order[j], v)) next.push_back(order[j]);
            if (next.empty()) {
                if (int(cur.size()) > res.size) {
                    res.size = int(cur.size());
                    res.witness = cur;
                }
            } else {
                expand(std::move(next));
            }
            cur.pop_back();
            if (!res.exact) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g, uint64_t max_nodes) {
    Searcher s(g, max_nodes);
    if (g.n() == 0) return s.res;
    s.res.size = 0;
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    s.expand(all);
    return s.res;
}

int clique_number(const Graph& g) {
    CliqueResult r = max_clique(g);
    if (!r.exact) throw std::runtime_error("clique search budget exhausted");
    return r.size;
}

}  // namespace bcol
