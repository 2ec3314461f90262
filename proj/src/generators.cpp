#include "bcol/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bcol {

namespace {

uint32_t rng_below(std::mt19937& rng, uint32_t m) { return rng() % m; }

}  // namespace

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph hypercube(int d) {
    if (d < 0) throw std::invalid_argument("negative dimension");
    if (d > 20) throw std::invalid_argument("dimension too large");
    int n = 1 << d;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b)
            if (!(u & (1 << b))) g.add_edge(u, u | (1 << b));
    return g;
}

Graph crown(int p) {
    if (p < 2) throw std::invalid_argument("crown needs p >= 2");
    Graph g(2 * p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) g.add_edge(i, p + j);
    return g;
}

Graph spider(int k, bool thick) {
    if (k < 2) throw std::invalid_argument("spider needs k >= 2");
    Graph g(2 * k);  // 0..k-1 clique, k..2k-1 stable
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bool want = thick ? (i != j) : (i == j);
            if (want) g.add_edge(j, k + i);
        }
    return g;
}

Graph pivoted_tree() {
    // 0..4 = inner path with pivot 2; 5..10 = leaves
    Graph g(11);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(1, 5);
    g.add_edge(3, 6);
    g.add_edge(0, 7);
    g.add_edge(0, 8);
    g.add_edge(4, 9);
    g.add_edge(4, 10);
    return g;
}

Graph random_gnp(int n, int percent, uint32_t seed) {
    std::mt19937 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (int(rng_below(rng, 100)) < percent) g.add_edge(u, v);
    return g;
}

Graph random_chordal(int n, uint32_t seed) {
    std::mt19937 rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        // attach v to a clique grown greedily from a random anchor
        int r = int(rng_below(rng, uint32_t(v)));
        std::vector<int> c{r};
        std::vector<int> cand = g.neighbor_list(r);
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int u : cand) {
            bool fits = true;
            for (int w : c)
                if (!g.has_edge(u, w)) { fits = false; break; }
            if (fits && rng_below(rng, 2) == 0) c.push_back(u);
        }
        for (int u : c) g.add_edge(v, u);
    }
    return g;
}

namespace {

// shifts h into g starting at offset, returns vertex count of h
int paste(Graph& g, const Graph& h, int offset) {
    for (int u = 0; u < h.n(); ++u)
        for (int v = h.neighbors(u).next(u); v >= 0; v = h.neighbors(u).next(v))
            g.add_edge(offset + u, offset + v);
    return h.n();
}

Graph rec_p4_sparse(int n, std::mt19937& rng) {
    if (n <= 1) return Graph(n);
    int op = int(rng_below(rng, n >= 5 ? 3u : 2u));
    if (op == 2) {
        // spider with optional head
        int kmax = (n - 1) / 2;
        int k = 2 + int(rng_below(rng, uint32_t(kmax - 1)));
        bool thick = rng_below(rng, 2) == 1;
        Graph body = spider(k, thick);
        int hn = n - 2 * k;
        Graph head = rec_p4_sparse(hn, rng);
        Graph g(n);
        paste(g, body, 0);
        paste(g, head, 2 * k);
        for (int u = 0; u < k; ++u)  // head complete to the clique part
            for (int v = 0; v < hn; ++v) g.add_edge(u, 2 * k + v);
        return g;
    }
    int n1 = 1 + int(rng_below(rng, uint32_t(n - 1)));
    Graph a = rec_p4_sparse(n1, rng);
    Graph b = rec_p4_sparse(n - n1, rng);
    Graph g(n);
    paste(g, a, 0);
    paste(g, b, n1);
    if (op == 1)  // join
        for (int u = 0; u < n1; ++u)
            for (int v = n1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph random_p4_sparse(int n, uint32_t seed) {
    std::mt19937 rng(seed);
    return rec_p4_sparse(n, rng);
}

}  // namespace bcol
