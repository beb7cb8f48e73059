#include "eqcol/driver.hpp"

#include <algorithm>
#include <chrono>

namespace eqcol {

SolveReport solve_descending(const Graph& g, int lower_bound, const TenureParams& params,
                             double time_limit_seconds, Rng& rng,
                             long long iter_cap_per_k) {
    int n = g.num_vertices();
    if (lower_bound < 1 || lower_bound > n)
        throw std::invalid_argument("lower bound must be in 1..n");

    SolveReport report;
    report.lower_bound_used = lower_bound;

    Partition current = naive(g, rng);
    report.initial_k = current.k();
    report.best_k = current.k();

    if (current.k() < lower_bound) {
        report.best_coloring = current;
        report.status = "naive coloring already uses fewer classes than the lower bound";
        return report;
    }

    using clock = std::chrono::steady_clock;
    auto start = clock::now();  // budget starts after naive
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

    int k = current.k() - 1;
    while (report.best_k > lower_bound && k >= 1) {
        double remaining = time_limit_seconds - elapsed();
        if (remaining <= 0) break;
        Partition s0 = procedure2(g, k, current, rng);
        StopCondition stop{iter_cap_per_k, remaining};
        SearchResult res = tabu_eqcol(g, k, s0, params, stop, rng);
        report.schedule.push_back({k, res});
        if (!res.solved) break;
        current = res.best;
        report.best_k = k;
        --k;
    }

    report.best_coloring = current;
    report.total_elapsed_seconds = elapsed();
    report.status = "ok";
    return report;
}

namespace {

struct BruteForce {
    const Graph& g;
    int n, k, base, r;
    std::vector<int> color;
    std::vector<int> size;
    int upper_count = 0;  // classes at size base+1
    int deficit = 0;      // total vertices still needed to lift every class to base

    explicit BruteForce(const Graph& graph, int classes)
        : g(graph),
          n(graph.num_vertices()),
          k(classes),
          base(n / classes),
          r(n % classes),
          color(n, -1),
          size(classes, 0),
          deficit(classes * (n / classes)) {}

    bool extend(int v, int max_used) {
        if (v == n) return upper_count == r && deficit == 0;
        if (deficit > n - v) return false;
        int limit = std::min(max_used + 1, k);  // class symmetry: first unused class only
        for (int c = 0; c < limit; ++c) {
            if (size[c] == base + 1) continue;
            if (size[c] == base && upper_count == r) continue;
            bool conflict = false;
            for (int w : g.neighbors(v))
                if (color[w] == c) {
                    conflict = true;
                    break;
                }
            if (conflict) continue;
            color[v] = c;
            ++size[c];
            if (size[c] <= base) --deficit;
            if (size[c] == base + 1) ++upper_count;
            if (extend(v + 1, std::max(max_used, c + 1))) return true;
            if (size[c] == base + 1) --upper_count;
            if (size[c] <= base) ++deficit;
            --size[c];
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

int brute_force_chi_eq(const Graph& g) {
    int n = g.num_vertices();
    if (n > 12) throw std::invalid_argument("brute force oracle limited to n <= 12");
    if (n == 0) throw std::invalid_argument("empty graph");
    for (int k = 1; k <= n; ++k) {
        BruteForce bf(g, k);
        if (bf.extend(0, 0)) return k;
    }
    throw std::logic_error("unreachable: k = n always admits singleton classes");
}

}  // namespace eqcol
