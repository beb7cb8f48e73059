#include "eqcol/tabu.hpp"

#include <chrono>
#include <cmath>

namespace eqcol {

int tenure(const TenureParams& params, int conflict_count, Rng& rng) {
    if (params.beta < 1) throw std::invalid_argument("beta must be >= 1");
    if (params.alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    if (conflict_count < 0) throw std::invalid_argument("negative conflict count");
    return static_cast<int>(std::floor(params.alpha * conflict_count)) +
           rng.uniform(0, params.beta - 1);
}

std::vector<Move> enumerate_neighborhood(const Partition& s) {
    std::vector<Move> out;
    for_each_neighbor(s, [&](const Move& m) { out.push_back(m); });
    return out;
}

namespace {

bool move_is_tabu(const Partition& s, const TabuList& list, long long iteration,
                  const Move& m) {
    int i = s.color_of(m.v);
    if (m.kind == Move::Kind::OneMove) return list.is_tabu(m.v, m.target, iteration);
    int j = s.color_of(m.target);
    // the exchanged solution presents both (v, j) and (u, i)
    return list.is_tabu(m.v, j, iteration) || list.is_tabu(m.target, i, iteration);
}

}  // namespace

std::optional<Move> best_admissible_move(const Partition& s, const TabuList& list,
                                         long long iteration, int best_so_far, Rng& rng) {
    std::optional<Move> chosen, fallback;
    int chosen_ties = 0, fallback_ties = 0;
    int f = s.objective();

    for_each_neighbor(s, [&](const Move& m) {
        bool admissible = f + m.delta < best_so_far ||  // aspiration, strict
                          !move_is_tabu(s, list, iteration, m);
        if (admissible) {
            if (!chosen || m.delta < chosen->delta) {
                chosen = m;
                chosen_ties = 1;
            } else if (m.delta == chosen->delta && rng.uniform(1, ++chosen_ties) == 1) {
                chosen = m;
            }
        } else {
            if (!fallback || m.delta < fallback->delta) {
                fallback = m;
                fallback_ties = 1;
            } else if (m.delta == fallback->delta && rng.uniform(1, ++fallback_ties) == 1) {
                fallback = m;
            }
        }
    });
    return chosen ? chosen : fallback;
}

SearchResult tabu_eqcol(const Graph& g, int k, const Partition& s0,
                        const TenureParams& params, const StopCondition& stop, Rng& rng) {
    if (&s0.graph() != &g || s0.k() != k)
        throw std::invalid_argument("initial solution does not match (g, k)");
    if (!stop.max_iterations && !stop.time_limit_seconds)
        throw std::invalid_argument("stop condition needs at least one bound");

    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

    Partition s = s0;
    SearchResult res{s0, s0.objective(), 0, 0, 0.0, s0.objective() == 0};
    TabuList list(g.num_vertices(), k);

    for (long long iter = 1; res.best_objective > 0; ++iter) {
        if (stop.max_iterations && iter > *stop.max_iterations) break;
        if (stop.time_limit_seconds && elapsed() >= *stop.time_limit_seconds) break;

        auto mv = best_admissible_move(s, list, iter, res.best_objective, rng);
        if (!mv) break;  // stuck: no neighbors at all

        int conflict_count = s.num_conflicting();  // |C(s)| of the solution being left
        int t = tenure(params, conflict_count, rng);
        int v = mv->v;
        int former = s.color_of(v);
        if (mv->kind == Move::Kind::OneMove)
            s.apply_1move(v, mv->target);
        else
            s.apply_2exchange(v, mv->target);
        list.store(v, former, iter, t);

        res.iterations_run = iter;
        if (s.objective() < res.best_objective) {
            res.best = s;
            res.best_objective = s.objective();
            res.iterations_to_best = iter;
        }
    }

    res.elapsed_seconds = elapsed();
    res.solved = res.best_objective == 0;
    return res;
}

}  // namespace eqcol
