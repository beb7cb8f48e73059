#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqcol {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph with vertices 0..n-1. Immutable once built.
// Duplicate edges (including mirrored orientations) are collapsed; self-loops
// are rejected.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int max_degree() const;

    void write_dimacs(std::ostream& os) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

// Reads a DIMACS .col stream. The p-line edge count is advisory; edges are
// deduplicated and counted from the e-lines.
Graph parse_dimacs(std::istream& in);

// Kneser graph K(a, b): vertices are the b-subsets of {1..a} in lexicographic
// order, adjacent iff disjoint.
Graph generate_kneser(int a, int b);

}  // namespace eqcol
