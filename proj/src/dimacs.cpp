#include "bcol/dimacs.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace bcol {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<Graph> g;
    int declared_edges = 0;
    int seen_edges = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;  // blank
        if (tok == "c") continue;
        if (tok == "p") {
            if (g) throw ParseError(line_no, "duplicate p line");
            std::string fmt;
            int n, m;
            if (!(ss >> fmt >> n >> m)) throw ParseError(line_no, "malformed p line");
            if (fmt != "edge" && fmt != "col") throw ParseError(line_no, "unknown format " + fmt);
            if (n < 0 || m < 0) throw ParseError(line_no, "negative size");
            g.emplace(n);
            declared_edges = m;
        } else if (tok == "e") {
            if (!g) throw ParseError(line_no, "edge before p line");
            int u, v;
            if (!(ss >> u >> v)) throw ParseError(line_no, "malformed e line");
            if (u < 1 || u > g->n() || v < 1 || v > g->n())
                throw ParseError(line_no, "vertex out of range");
            if (u == v) throw ParseError(line_no, "self loop");
            g->add_edge(u - 1, v - 1);
            ++seen_edges;
        } else {
            throw ParseError(line_no, "unknown line type " + tok);
        }
    }
    if (!g) throw ParseError(line_no, "missing p line");
    (void)declared_edges;  // duplicate e lines make strict matching unhelpful
    (void)seen_edges;
    return *g;
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
            out << "e " << u + 1 << " " << v + 1 << "\n";
}

}  // namespace bcol
