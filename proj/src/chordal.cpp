#include "bcol/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcol {

std::vector<int> mcs_order(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        visit.push_back(best);
        for (int u = g.neighbors(best).first(); u >= 0; u = g.neighbors(best).next(u))
            if (!visited[u]) ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

bool verify_peo(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    if (int(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

std::vector<int> find_chordless_cycle(const Graph& g) {
    int n = g.n();
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb = g.neighbor_list(v);
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                int u = nb[a], w = nb[b];
                if (g.has_edge(u, w)) continue;
                // shortest u..w path avoiding v and all other neighbors of v;
                // shortest means chordless, so v + path is an induced cycle
                Bitset blocked = g.neighbors(v);
                blocked.set(v);
                blocked.reset(u);
                blocked.reset(w);
                std::vector<int> parent(n, -2);
                parent[u] = -1;
                std::vector<int> queue{u};
                for (size_t qi = 0; qi < queue.size() && parent[w] == -2; ++qi) {
                    int x = queue[qi];
                    for (int y = g.neighbors(x).first(); y >= 0; y = g.neighbors(x).next(y)) {
                        if (blocked.get(y) || parent[y] != -2) continue;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
                if (parent[w] == -2) continue;
                std::vector<int> cyc{v};
                for (int x = w; x != -1; x = parent[x]) cyc.push_back(x);
                std::reverse(cyc.begin() + 1, cyc.end());
                return cyc;
            }
    }
    return {};
}

ChordalityResult check_chordal(const Graph& g) {
    ChordalityResult r;
    std::vector<int> order = mcs_order(g);
    if (verify_peo(g, order)) {
        r.chordal = true;
        r.peo = std::move(order);
        return r;
    }
    r.hole = find_chordless_cycle(g);
    if (r.hole.empty()) throw std::logic_error("elimination order failed but no hole found");
    return r;
}

int clique_number_chordal(const Graph& g, const std::vector<int>& peo) {
    if (!verify_peo(g, peo)) throw std::invalid_argument("not an elimination order");
    int n = g.n();
    if (n == 0) return 0;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    int best = 1;
    for (int i = 0; i < n; ++i) {
        int v = peo[i], later = 0;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (pos[u] > i) ++later;
        best = std::max(best, later + 1);
    }
    return best;
}

}  // namespace bcol
