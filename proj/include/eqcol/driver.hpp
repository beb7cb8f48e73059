#pragma once

#include <string>
#include <vector>

#include "eqcol/construct.hpp"
#include "eqcol/tabu.hpp"

namespace eqcol {

struct ScheduleEntry {
    int k;
    SearchResult result;
};

struct SolveReport {
    int best_k = 0;
    Partition best_coloring;
    std::vector<ScheduleEntry> schedule;  // k strictly decreasing
    int initial_k = 0;                    // color count of the naive seed
    int lower_bound_used = 1;
    double total_elapsed_seconds = 0.0;   // naive time excluded
    std::string status;                   // "ok" or an explanation
};

// Descending-k protocol: naive seed, then repeatedly reseed with procedure2
// and run tabu_eqcol at k-1 until the time budget runs out, an attempt fails,
// or a lower_bound-eqcol is reached. Failed k values are not retried. The
// naive construction time is excluded from the budget.
SolveReport solve_descending(const Graph& g, int lower_bound, const TenureParams& params,
                             double time_limit_seconds, Rng& rng,
                             long long iter_cap_per_k = 500000);

// Exact equitable chromatic number by pruned exhaustive search; test oracle,
// guarded to n <= 12.
int brute_force_chi_eq(const Graph& g);

}  // namespace eqcol
