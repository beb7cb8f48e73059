#include "eqcol/partition.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace eqcol {

Partition Partition::from_assignment(const Graph& g, int k, std::vector<int> color_of) {
    int n = g.num_vertices();
    if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");
    if (static_cast<int>(color_of.size()) != n)
        throw std::invalid_argument("assignment size mismatch");

    Partition s;
    s.g_ = &g;
    s.k_ = k;
    s.base_ = n / k;
    s.r_ = n % k;
    s.class_size_.assign(k, 0);
    for (int v = 0; v < n; ++v) {
        int c = color_of[v];
        if (c < 0 || c >= k) throw std::invalid_argument("class index out of range");
        ++s.class_size_[c];
    }
    auto [lo, hi] = std::minmax_element(s.class_size_.begin(), s.class_size_.end());
    if (*hi - *lo > 1)
        throw std::invalid_argument("class sizes " + std::to_string(*lo) + " and " +
                                    std::to_string(*hi) + " violate equity");
    s.color_of_ = std::move(color_of);

    s.gamma_.assign(static_cast<std::size_t>(n) * k, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            ++s.gamma_[static_cast<std::size_t>(v) * k + s.color_of_[w]];

    int twice_f = 0;
    for (int v = 0; v < n; ++v) twice_f += s.gamma(v, s.color_of_[v]);
    s.objective_ = twice_f / 2;
    return s;
}

std::vector<int> Partition::conflicting_set() const {
    std::vector<int> out;
    int n = g_->num_vertices();
    for (int v = 0; v < n; ++v)
        if (gamma(v, color_of_[v]) > 0) out.push_back(v);
    return out;
}

int Partition::num_conflicting() const {
    int c = 0;
    int n = g_->num_vertices();
    for (int v = 0; v < n; ++v)
        if (gamma(v, color_of_[v]) > 0) ++c;
    return c;
}

std::pair<std::vector<int>, std::vector<int>> Partition::equity_sets() const {
    std::vector<int> up, down;
    for (int c = 0; c < k_; ++c)
        (in_upper(c) ? up : down).push_back(c);
    return {std::move(up), std::move(down)};
}

int Partition::delta_1move(int v, int j) const {
    int i = color_of_[v];
    if (j == i) throw std::invalid_argument("1-move target equals current class");
    return gamma(v, j) - gamma(v, i);
}

int Partition::delta_2exchange(int v, int u) const {
    int i = color_of_[v];
    int j = color_of_[u];
    if (i == j) throw std::invalid_argument("2-exchange requires distinct classes");
    int e = g_->adjacent(u, v) ? 1 : 0;
    // the u-v edge, when present, must not be counted from either side
    return (gamma(u, i) - e) - gamma(u, j) + (gamma(v, j) - e) - gamma(v, i);
}

void Partition::apply_1move(int v, int j) {
    int i = color_of_[v];
    if (j == i) throw std::invalid_argument("1-move target equals current class");
    if (!in_upper(i)) throw std::invalid_argument("1-move source class not in W+");
    if (class_size_[j] != base_) throw std::invalid_argument("1-move target class not in W-");
    objective_ += delta_1move(v, j);
    for (int w : g_->neighbors(v)) {
        std::size_t row = static_cast<std::size_t>(w) * k_;
        --gamma_[row + i];
        ++gamma_[row + j];
    }
    color_of_[v] = j;
    --class_size_[i];
    ++class_size_[j];
}

void Partition::apply_2exchange(int v, int u) {
    int i = color_of_[v];
    int j = color_of_[u];
    if (i == j) throw std::invalid_argument("2-exchange requires distinct classes");
    objective_ += delta_2exchange(v, u);
    for (int w : g_->neighbors(v)) {
        std::size_t row = static_cast<std::size_t>(w) * k_;
        --gamma_[row + i];
        ++gamma_[row + j];
    }
    for (int w : g_->neighbors(u)) {
        std::size_t row = static_cast<std::size_t>(w) * k_;
        --gamma_[row + j];
        ++gamma_[row + i];
    }
    color_of_[v] = j;
    color_of_[u] = i;
}

int Partition::recompute_objective() const {
    int f = 0;
    int n = g_->num_vertices();
    for (int v = 0; v < n; ++v)
        for (int w : g_->neighbors(v))
            if (w > v && color_of_[w] == color_of_[v]) ++f;
    return f;
}

bool verify_eqcol(const Graph& g, const Partition& s) {
    if (&s.graph() != &g) return false;
    int mn = g.num_vertices(), mx = 0;
    for (int c = 0; c < s.k(); ++c) {
        mn = std::min(mn, s.class_size(c));
        mx = std::max(mx, s.class_size(c));
    }
    return mx - mn <= 1 && s.objective() == 0;
}

void write_coloring(std::ostream& os, const Partition& s) {
    os << "s " << s.k() << ' ' << s.objective() << '\n';
    int n = s.graph().num_vertices();
    for (int v = 0; v < n; ++v) os << v + 1 << ' ' << s.color_of(v) + 1 << '\n';
}

ColoringFile read_coloring(std::istream& in) {
    ColoringFile out;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::vector<std::pair<int, int>> entries;
    int max_vertex = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag != "s") throw ParseError(lineno, "expected header line 's k f'");
            if (!(ls >> out.k >> out.f)) throw ParseError(lineno, "malformed header line");
            have_header = true;
            continue;
        }
        int v, c;
        if (!(ls >> v)) continue;
        if (!(ls >> c)) throw ParseError(lineno, "malformed coloring line");
        if (v < 1 || c < 1) throw ParseError(lineno, "ids must be 1-based positive");
        entries.emplace_back(v - 1, c - 1);
        max_vertex = std::max(max_vertex, v);
    }
    if (!have_header) throw ParseError(lineno, "missing header line");
    out.color_of.assign(max_vertex, -1);
    for (auto [v, c] : entries) out.color_of[v] = c;
    for (int v = 0; v < max_vertex; ++v)
        if (out.color_of[v] < 0)
            throw ParseError(lineno, "vertex " + std::to_string(v + 1) + " has no color");
    return out;
}

}  // namespace eqcol
