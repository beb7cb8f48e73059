#include "eqcol/bench.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace eqcol {

namespace {

std::string fmt_double(double x, const char* spec = "%g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

}  // namespace

std::string csv_header() {
    return "instance,n,m,lb,alpha,beta,seed,k,solved,residual,iters,seconds";
}

std::string csv_row(const RunRecord& rec) {
    std::ostringstream os;
    os << rec.instance << ',' << rec.n << ',' << rec.m << ',' << rec.lower_bound << ','
       << fmt_double(rec.alpha) << ',' << rec.beta << ',' << rec.seed << ','
       << rec.k_reached << ',' << (rec.solved ? 1 : 0) << ',' << rec.residual << ','
       << rec.iterations << ',' << fmt_double(rec.seconds, "%.1f");
    return os.str();
}

RunOutcome run_instance(const Graph& g, const RunConfig& cfg) {
    RunOutcome out;
    RunRecord& rec = out.record;
    rec.instance = cfg.instance_name;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    rec.lower_bound = cfg.lower_bound;
    rec.alpha = cfg.params.alpha;
    rec.beta = cfg.params.beta;
    rec.seed = cfg.seed;

    Rng rng(cfg.seed);
    if (cfg.fixed_k) {
        int k = *cfg.fixed_k;
        Partition s0 = procedure1(g, k, rng);
        StopCondition stop{cfg.max_iterations, cfg.time_limit_seconds};
        SearchResult res = tabu_eqcol(g, k, s0, cfg.params, stop, rng);
        rec.k_reached = k;
        rec.solved = res.solved;
        rec.residual = res.best_objective;
        rec.iterations = res.iterations_run;
        rec.seconds = res.elapsed_seconds;
        if (res.solved) out.coloring = res.best;
    } else {
        SolveReport report = solve_descending(g, cfg.lower_bound, cfg.params,
                                              cfg.time_limit_seconds, rng,
                                              cfg.max_iterations);
        rec.k_reached = report.best_k;
        rec.solved = report.best_k <= cfg.lower_bound;
        if (!rec.solved && !report.schedule.empty() &&
            !report.schedule.back().result.solved)
            rec.residual = report.schedule.back().result.best_objective;
        for (const auto& entry : report.schedule)
            rec.iterations += entry.result.iterations_run;
        rec.seconds = report.total_elapsed_seconds;
        out.coloring = report.best_coloring;
    }
    return out;
}

void append_csv(const std::string& path, const RunRecord& rec) {
    bool need_header =
        !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream os(path, std::ios::app);
    if (!os) throw std::runtime_error("cannot open csv file " + path);
    if (need_header) os << csv_header() << '\n';
    os << csv_row(rec) << '\n';
}

namespace {

std::string cell_label(std::size_t idx) {
    if (idx < 26) return std::string(1, static_cast<char>('A' + idx));
    return "c" + std::to_string(idx);
}

}  // namespace

SweepResult run_sweep(const std::vector<SweepInstance>& instances,
                      const std::vector<double>& alphas, const std::vector<int>& betas,
                      double budget_seconds, long long max_iterations, std::uint64_t seed,
                      std::ostream& table) {
    if (instances.empty() || alphas.empty() || betas.empty())
        throw std::invalid_argument("sweep needs nonempty instance and parameter grids");

    SweepResult result;
    std::size_t cells_per_row = alphas.size() * betas.size();

    table << "instance\tk";
    for (std::size_t c = 0; c < cells_per_row; ++c) table << '\t' << cell_label(c);
    table << '\n';
    for (std::size_t c = 0; c < cells_per_row; ++c)
        table << "# " << cell_label(c) << ": alpha=" << alphas[c / betas.size()]
              << " beta=" << betas[c % betas.size()] << '\n';

    for (std::size_t gi = 0; gi < instances.size(); ++gi) {
        const auto& ins = instances[gi];
        std::ifstream in(ins.path);
        Graph g = [&] {
            try {
                if (!in) throw std::runtime_error("cannot open " + ins.path);
                return parse_dimacs(in);
            } catch (const std::exception& e) {
                table << "# sweep aborted at " << ins.path << ": " << e.what() << '\n';
                throw;
            }
        }();

        std::string name = std::filesystem::path(ins.path).stem().string();
        // one shared initial solution per instance, reused by every cell
        Rng init_rng(seed + gi);
        Partition s0 = procedure1(g, ins.k, init_rng);

        table << name << '\t' << ins.k;
        std::size_t ci = 0;
        for (double alpha : alphas) {
            for (int beta : betas) {
                Rng rng(seed ^ (0x9e3779b97f4a7c15ull * (gi * cells_per_row + ci + 1)));
                TenureParams params{alpha, beta};
                StopCondition stop{max_iterations, budget_seconds};
                SearchResult res = tabu_eqcol(g, ins.k, s0, params, stop, rng);
                SweepCell cell{name, alpha, beta, res.solved, res.best_objective,
                               res.iterations_run, res.elapsed_seconds};
                result.cells.push_back(cell);
                if (cell.solved)
                    table << '\t' << fmt_double(cell.seconds, "%.1f");
                else
                    table << "\t{" << cell.residual << '}';
                ++ci;
            }
        }
        table << '\n';
    }

    long long solved = 0;
    double time_sum = 0;
    for (const auto& cell : result.cells) {
        if (cell.solved) {
            ++solved;
            time_sum += cell.seconds;
        } else {
            result.residual_sum += cell.residual;
        }
    }
    result.success_pct = 100.0 * static_cast<double>(solved) /
                         static_cast<double>(result.cells.size());
    result.avg_time = solved ? time_sum / static_cast<double>(solved) : 0.0;

    table << "Sum of objective values\t" << result.residual_sum << '\n';
    table << "Success\t" << fmt_double(result.success_pct, "%.0f") << "%\n";
    table << "Average Time\t" << fmt_double(result.avg_time, "%.1f") << '\n';
    return result;
}

}  // namespace eqcol
