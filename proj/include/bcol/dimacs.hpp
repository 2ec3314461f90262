#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

// comments are emitted verbatim after "c ", before the p line
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {});

}  // namespace bcol
