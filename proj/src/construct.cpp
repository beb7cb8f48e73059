#include "eqcol/construct.hpp"

#include <algorithm>
#include <numeric>

namespace eqcol {

namespace {

// Shared placement loop. color_of holds -1 for unassigned vertices; order
// lists exactly the unassigned vertices in the order they are placed.
Partition place_remaining(const Graph& g, int k, std::vector<int> color_of,
                          const std::vector<int>& order, Rng& rng) {
    int n = g.num_vertices();
    int base = n / k;
    int r = n % k;

    std::vector<int> size(k, 0);
    for (int v = 0; v < n; ++v)
        if (color_of[v] >= 0) ++size[color_of[v]];
    int rtilde = 0;
    for (int c = 0; c < k; ++c) {
        if (size[c] > base + 1) throw std::invalid_argument("partial class exceeds equity cap");
        if (size[c] == base + 1) ++rtilde;
    }
    if (rtilde > r) throw std::invalid_argument("partial has too many full classes");

    // neighbor tallies against the classes built so far
    std::vector<int> cnt(static_cast<std::size_t>(n) * k, 0);
    for (int v = 0; v < n; ++v)
        if (color_of[v] >= 0)
            for (int w : g.neighbors(v)) ++cnt[static_cast<std::size_t>(w) * k + color_of[v]];

    std::vector<int> candidates;
    for (int v : order) {
        int cap = (rtilde < r) ? base + 1 : base;  // M
        int chosen = -1;
        for (int c = 0; c < k; ++c) {
            if (size[c] > cap - 1) continue;
            if (cnt[static_cast<std::size_t>(v) * k + c] == 0) {
                chosen = c;
                break;
            }
        }
        if (chosen < 0) {
            candidates.clear();
            for (int c = 0; c < k; ++c)
                if (size[c] <= cap - 1) candidates.push_back(c);
            chosen = candidates[rng.uniform(0, static_cast<int>(candidates.size()) - 1)];
        }
        color_of[v] = chosen;
        ++size[chosen];
        if (size[chosen] == base + 1) ++rtilde;
        for (int w : g.neighbors(v)) ++cnt[static_cast<std::size_t>(w) * k + chosen];
    }
    return Partition::from_assignment(g, k, std::move(color_of));
}

std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

}  // namespace

Partition procedure1(const Graph& g, int k, Rng& rng, const std::vector<int>& partial) {
    int n = g.num_vertices();
    if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");
    std::vector<int> color_of(n, -1);
    if (!partial.empty()) {
        if (static_cast<int>(partial.size()) != n)
            throw std::invalid_argument("partial assignment size mismatch");
        color_of = partial;
        for (int c : color_of)
            if (c >= k) throw std::invalid_argument("partial class index out of range");
    }
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (color_of[v] < 0) order.push_back(v);
    rng.shuffle(order);
    return place_remaining(g, k, std::move(color_of), order, rng);
}

Partition procedure2(const Graph& g, int k, const Partition& prev, Rng& rng) {
    int n = g.num_vertices();
    if (k < 1 || k + 1 > n) throw std::invalid_argument("k must be in 1..n-1");
    if (&prev.graph() != &g || prev.k() != k + 1 || prev.objective() != 0)
        throw std::invalid_argument("procedure2 needs a proper equitable (k+1)-coloring");

    std::vector<int> perm(k + 1);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);

    std::vector<int> keep(k + 1, -1);  // prev class -> new class, -1 for dropped
    for (int i = 0; i < k; ++i) keep[perm[i]] = i;

    std::vector<int> color_of(n, -1), order;
    for (int v = 0; v < n; ++v) {
        int c = keep[prev.color_of(v)];
        if (c >= 0)
            color_of[v] = c;
        else
            order.push_back(v);
    }
    rng.shuffle(order);
    return place_remaining(g, k, std::move(color_of), order, rng);
}

Partition naive(const Graph& g, Rng& rng) {
    int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("empty graph");
    std::vector<int> order = degree_order(g);

    // plain (non-equitable) greedy gives the starting k
    std::vector<int> color(n, -1);
    int k0 = 1;
    std::vector<char> used;
    for (int v : order) {
        used.assign(n, 0);
        for (int w : g.neighbors(v))
            if (color[w] >= 0) used[color[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        k0 = std::max(k0, c + 1);
    }

    for (int k = k0; k <= n; ++k) {
        Partition s = place_remaining(g, k, std::vector<int>(n, -1), order, rng);
        if (s.objective() == 0) return s;
    }
    // k = n yields singleton classes, which is always conflict-free
    throw std::logic_error("unreachable: singleton partition must be proper");
}

}  // namespace eqcol
