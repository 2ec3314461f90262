#include "bcol/lexprod.hpp"

namespace bcol {

Graph lex_product(const Graph& g, const Graph& h) {
    int ng = g.n(), nh = h.n();
    Graph p(ng * nh);
    for (int u = 0; u < ng; ++u) {
        for (int v = 0; v < nh; ++v) {
            int a = prod_index(u, v, nh);
            // inside a copy
            for (int w = h.neighbors(v).next(v); w >= 0; w = h.neighbors(v).next(w))
                p.add_edge(a, prod_index(u, w, nh));
            // across copies: complete between adjacent copies
            for (int x = g.neighbors(u).next(u); x >= 0; x = g.neighbors(u).next(x))
                for (int w = 0; w < nh; ++w) p.add_edge(a, prod_index(x, w, nh));
        }
    }
    return p;
}

std::vector<std::string> pair_legend(int ng, int nh) {
    std::vector<std::string> out;
    out.reserve(size_t(ng) * nh);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v)
            out.push_back("pair " + std::to_string(prod_index(u, v, nh) + 1) + " " +
                          std::to_string(u + 1) + " " + std::to_string(v + 1));
    return out;
}

}  // namespace bcol
