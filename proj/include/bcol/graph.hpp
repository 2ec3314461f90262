#pragma once

#include <string>
#include <vector>

#include "bcol/bitset.hpp"

namespace bcol {

// simple undirected graph on vertices 0..n-1
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const { return m_; }

    void add_edge(int u, int v);  // throws on self loop / out of range; duplicates ignored
    bool has_edge(int u, int v) const;
    int deg(int v) const { return deg_[v]; }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    std::vector<int> neighbor_list(int v) const { return adj_[v].to_vector(); }

    int max_degree() const;

    Graph complement() const;
    // induced subgraph on verts (need not be sorted); vertex i of the result
    // is verts_sorted[i]
    Graph induced(std::vector<int> verts) const;

    bool is_clique(const std::vector<int>& verts) const;
    bool is_stable(const std::vector<int>& verts) const;
    bool connected() const;

    bool same_structure(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
};

// largest k such that at least k vertices have degree >= k-1;
// upper bound on the number of colors any b-coloring can use
int m_degree(const Graph& g);

// N(u)\{v} == N(v)\{u}
bool same_external_neighborhood(const Graph& g, int u, int v);

}  // namespace bcol
