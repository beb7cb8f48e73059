#include "eqcol/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace eqcol {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    n_ = n;
    words_ = static_cast<std::size_t>((n + 63) / 64);
    adj_.resize(n);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (adjacent(u, v)) continue;
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

void Graph::write_dimacs(std::ostream& os) const {
    os << "p edge " << n_ << ' ' << m_ << '\n';
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (v > u) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph parse_dimacs(std::istream& in) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    bool have_p = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_p) throw ParseError(lineno, "duplicate problem line");
            std::string fmt;
            long long pn, pm;
            if (!(ls >> fmt >> pn >> pm))
                throw ParseError(lineno, "malformed problem line");
            if (pn < 0) throw ParseError(lineno, "negative vertex count");
            n = static_cast<int>(pn);
            have_p = true;
            // pm is advisory; the edge lines are trusted instead
        } else if (tag == "e") {
            if (!have_p) throw ParseError(lineno, "edge line before problem line");
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else {
            throw ParseError(lineno, "unrecognized line tag '" + tag + "'");
        }
    }
    if (!have_p) throw ParseError(lineno, "missing problem line");
    return Graph(n, edges);
}

namespace {

long long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    long long r = 1;
    for (int i = 0; i < b; ++i) {
        r = r * (a - i) / (i + 1);
    }
    return r;
}

}  // namespace

Graph generate_kneser(int a, int b) {
    if (b < 1 || b > a) throw std::invalid_argument("kneser parameters require 1 <= b <= a");
    if (a > 30) throw std::invalid_argument("kneser parameter a too large");
    long long nv = binom(a, b);
    if (nv > 2'000'000) throw std::invalid_argument("kneser graph too large");
    // b-subsets of {1..a} as bitmasks, generated in lexicographic order of the
    // sorted element lists.
    std::vector<std::uint32_t> masks;
    std::vector<int> comb(b);
    for (int i = 0; i < b; ++i) comb[i] = i + 1;
    while (true) {
        std::uint32_t m = 0;
        for (int e : comb) m |= 1u << (e - 1);
        masks.push_back(m);
        int i = b - 1;
        while (i >= 0 && comb[i] == a - (b - 1 - i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < b; ++j) comb[j] = comb[j - 1] + 1;
    }
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(masks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((masks[i] & masks[j]) == 0) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace eqcol
