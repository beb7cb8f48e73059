#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqcol/driver.hpp"

namespace eqcol {

// One CSV row: instance,n,m,lb,alpha,beta,seed,k,solved,residual,iters,seconds
struct RunRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    int lower_bound = 1;
    double alpha = 0.9;
    int beta = 5;
    std::uint64_t seed = 1;
    int k_reached = 0;
    bool solved = false;
    long long residual = 0;
    long long iterations = 0;
    double seconds = 0.0;
};

std::string csv_header();
std::string csv_row(const RunRecord& rec);

struct RunConfig {
    std::string instance_name;
    int lower_bound = 1;
    std::optional<int> fixed_k;  // Table 1 style single-k run when set
    TenureParams params;
    double time_limit_seconds = 3600.0;
    long long max_iterations = 500000;
    std::uint64_t seed = 1;
};

struct RunOutcome {
    RunRecord record;
    std::optional<Partition> coloring;  // only when it is a valid eqcol
};

// Runs solve_descending, or a single fixed-k tabu_eqcol from a procedure1
// start when fixed_k is set.
RunOutcome run_instance(const Graph& g, const RunConfig& cfg);

// Appends the row, writing the header first when the file is new or empty.
void append_csv(const std::string& path, const RunRecord& rec);

struct SweepInstance {
    std::string path;
    int k = 0;
};

struct SweepCell {
    std::string instance;
    double alpha;
    int beta;
    bool solved = false;
    long long residual = 0;
    long long iterations = 0;
    double seconds = 0.0;
};

struct SweepResult {
    std::vector<SweepCell> cells;
    long long residual_sum = 0;   // over unsolved cells
    double success_pct = 0.0;     // solved cells / total
    double avg_time = 0.0;        // over solved cells
};

// Parameter sweep: for each instance builds one shared procedure1 start at
// the given fixed k, then runs every (alpha, beta) cell from that same start.
// Prints a matrix table with A.. column labels and the three footer
// aggregates to `table`.
SweepResult run_sweep(const std::vector<SweepInstance>& instances,
                      const std::vector<double>& alphas, const std::vector<int>& betas,
                      double budget_seconds, long long max_iterations, std::uint64_t seed,
                      std::ostream& table);

}  // namespace eqcol
