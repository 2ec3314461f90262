#include "bcol/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcol {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)), deg_(n, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self loop");
    if (adj_[u].get(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].get(v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
    return d;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u].get(v)) c.add_edge(u, v);
    return c;
}

Graph Graph::induced(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts) check_vertex(v);
    Graph h(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adj_[verts[i]].get(verts[j])) h.add_edge(int(i), int(j));
    return h;
}

bool Graph::is_clique(const std::vector<int>& verts) const {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!has_edge(verts[i], verts[j])) return false;
    return true;
}

bool Graph::is_stable(const std::vector<int>& verts) const {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) return false;
    return true;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<int> stack{0};
    Bitset seen(n_);
    seen.set(0);
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = adj_[v].first(); u >= 0; u = adj_[v].next(u))
            if (!seen.get(u)) {
                seen.set(u);
                ++cnt;
                stack.push_back(u);
            }
    }
    return cnt == n_;
}

int m_degree(const Graph& g) {
    std::vector<int> degs(g.n());
    for (int v = 0; v < g.n(); ++v) degs[v] = g.deg(v);
    std::sort(degs.rbegin(), degs.rend());
    int best = 0;
    for (int k = 1; k <= g.n(); ++k)
        if (degs[k - 1] >= k - 1) best = k;
    return best;
}

bool same_external_neighborhood(const Graph& g, int u, int v) {
    Bitset a = g.neighbors(u);
    Bitset b = g.neighbors(v);
    a.reset(v);
    b.reset(u);
    return a == b;
}

}  // namespace bcol
