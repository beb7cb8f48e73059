#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eqcol/bench.hpp"
#include "eqcol/driver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerify = 3;

eqcol::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return eqcol::parse_dimacs(in);
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

int cmd_solve(const std::string& in_path, int lb, int fixed_k, double alpha, int beta,
              double time_limit, long long iters, std::uint64_t seed,
              const std::string& out_path, const std::string& csv_path) {
    eqcol::Graph g = load_graph(in_path);
    eqcol::RunConfig cfg;
    cfg.instance_name = std::filesystem::path(in_path).stem().string();
    cfg.lower_bound = lb;
    if (fixed_k > 0) cfg.fixed_k = fixed_k;
    cfg.params = {alpha, beta};
    cfg.time_limit_seconds = time_limit;
    cfg.max_iterations = iters;
    cfg.seed = seed;

    eqcol::RunOutcome outcome = eqcol::run_instance(g, cfg);
    std::cout << eqcol::csv_header() << '\n' << eqcol::csv_row(outcome.record) << '\n';

    if (!out_path.empty()) {
        if (outcome.coloring) {
            std::ofstream os(out_path);
            if (!os) throw std::runtime_error("cannot open " + out_path);
            eqcol::write_coloring(os, *outcome.coloring);
        } else {
            std::cerr << "no valid eqcol found; coloring file not written\n";
        }
    }
    if (!csv_path.empty()) eqcol::append_csv(csv_path, outcome.record);
    return kExitOk;
}

int cmd_verify(const std::string& in_path, const std::string& coloring_path) {
    eqcol::Graph g = load_graph(in_path);
    std::ifstream cin_(coloring_path);
    if (!cin_) throw std::runtime_error("cannot open " + coloring_path);
    eqcol::ColoringFile cf = eqcol::read_coloring(cin_);
    if (static_cast<int>(cf.color_of.size()) != g.num_vertices()) {
        std::cerr << "coloring covers " << cf.color_of.size() << " vertices, graph has "
                  << g.num_vertices() << '\n';
        return kExitVerify;
    }
    try {
        eqcol::Partition s = eqcol::Partition::from_assignment(g, cf.k, cf.color_of);
        if (!eqcol::verify_eqcol(g, s)) {
            std::cerr << "not a proper coloring: " << s.objective()
                      << " conflicting edge(s)\n";
            return kExitVerify;
        }
        std::cout << "valid " << cf.k << "-eqcol\n";
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid partition: " << e.what() << '\n';
        return kExitVerify;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equitable coloring tabu search solver"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one instance");
    std::string in_path, out_path, csv_path;
    int lb = 1, fixed_k = 0, beta = 5;
    double alpha = 0.9, time_limit = 3600.0;
    long long iters = 500000;
    std::uint64_t seed = 1;
    solve->add_option("--in", in_path, "DIMACS .col instance")->required();
    solve->add_option("--lb", lb, "lower bound for the descending-k loop");
    solve->add_option("--k", fixed_k, "fixed-k single search instead of the descent");
    solve->add_option("--alpha", alpha, "tenure factor");
    solve->add_option("--beta", beta, "tenure random span");
    solve->add_option("--time", time_limit, "time budget in seconds");
    solve->add_option("--iters", iters, "iteration cap per tabu run");
    solve->add_option("--seed", seed, "random seed");
    solve->add_option("--out", out_path, "coloring output file");
    solve->add_option("--csv", csv_path, "CSV file to append the result row to");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Parameter sweep over (alpha, beta)");
    std::string instances_path, alphas_csv = "0.3,0.6,0.9", betas_csv = "5,10,15";
    double sweep_time = 3600.0;
    long long sweep_iters = 500000;
    std::uint64_t sweep_seed = 1;
    sweep->add_option("--instances", instances_path,
                      "file with one '<path> <k>' line per instance")->required();
    sweep->add_option("--alphas", alphas_csv, "comma-separated alpha grid");
    sweep->add_option("--betas", betas_csv, "comma-separated beta grid");
    sweep->add_option("--time", sweep_time, "per-cell time budget in seconds");
    sweep->add_option("--iters", sweep_iters, "per-cell iteration cap");
    sweep->add_option("--seed", sweep_seed, "random seed");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a coloring file");
    std::string verify_in, verify_coloring;
    verify->add_option("--in", verify_in, "DIMACS .col instance")->required();
    verify->add_option("--coloring", verify_coloring, "coloring file")->required();

    // gen-kneser
    auto* gen = app.add_subcommand("gen-kneser", "Generate a Kneser graph");
    int gen_a = 0, gen_b = 0;
    std::string gen_out;
    gen->add_option("--a", gen_a, "ground set size")->required();
    gen->add_option("--b", gen_b, "subset size")->required();
    gen->add_option("--out", gen_out, "output .col file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            if (fixed_k < 0 || lb < 1 || beta < 1 || alpha < 0) {
                std::cerr << "invalid flag values\n";
                return kExitUsage;
            }
            return cmd_solve(in_path, lb, fixed_k, alpha, beta, time_limit, iters, seed,
                             out_path, csv_path);
        }
        if (*sweep) {
            std::ifstream lst(instances_path);
            if (!lst) throw std::runtime_error("cannot open " + instances_path);
            std::vector<eqcol::SweepInstance> instances;
            std::string line;
            while (std::getline(lst, line)) {
                std::istringstream ls(line);
                eqcol::SweepInstance ins;
                if (!(ls >> ins.path)) continue;
                if (ins.path[0] == '#') continue;
                if (!(ls >> ins.k)) throw std::runtime_error("instance list needs '<path> <k>'");
                instances.push_back(ins);
            }
            eqcol::run_sweep(instances, parse_double_list(alphas_csv),
                             parse_int_list(betas_csv), sweep_time, sweep_iters,
                             sweep_seed, std::cout);
            return kExitOk;
        }
        if (*verify) return cmd_verify(verify_in, verify_coloring);
        if (*gen) {
            eqcol::Graph g = eqcol::generate_kneser(gen_a, gen_b);
            if (gen_out.empty()) {
                g.write_dimacs(std::cout);
            } else {
                std::ofstream os(gen_out);
                if (!os) throw std::runtime_error("cannot open " + gen_out);
                g.write_dimacs(os);
            }
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
