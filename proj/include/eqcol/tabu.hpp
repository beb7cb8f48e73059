#pragma once

#include <optional>
#include <vector>

#include "eqcol/partition.hpp"
#include "eqcol/rng.hpp"

namespace eqcol {

struct TenureParams {
    double alpha = 0.9;
    int beta = 5;
};

// At least one of the two bounds must be set; reaching f = 0 always stops.
struct StopCondition {
    std::optional<long long> max_iterations;
    std::optional<double> time_limit_seconds;
};

struct Move {
    enum class Kind { OneMove, Exchange };
    Kind kind;
    int v;       // the conflicting vertex being moved / first endpoint
    int target;  // destination class (OneMove) or swapped vertex (Exchange)
    int delta;
};

// Features are (vertex, class) pairs: "v had color c". A feature stored at
// iteration t with tenure d is tabu for iterations t+1 .. t+d exactly.
class TabuList {
public:
    TabuList(int n, int k) : k_(k), expiry_(static_cast<std::size_t>(n) * k, 0) {}

    bool is_tabu(int v, int c, long long iteration) const {
        return expiry_[static_cast<std::size_t>(v) * k_ + c] > iteration;
    }

    void store(int v, int c, long long iteration, int tenure) {
        expiry_[static_cast<std::size_t>(v) * k_ + c] = iteration + tenure + 1;
    }

private:
    int k_;
    std::vector<long long> expiry_;
};

// floor(alpha * |C(s)|) + Random(beta), Random drawing from {0..beta-1}.
int tenure(const TenureParams& params, int conflict_count, Rng& rng);

// Visits every neighbor of s: all equity-preserving 1-moves (conflicting
// vertex in a W+ class to a W- class; only when n mod k != 0) and all
// 2-exchanges (v conflicting, u of a different color j with i < j or u not
// conflicting, so each unordered pair appears once).
template <class Visitor>
void for_each_neighbor(const Partition& s, Visitor&& visit) {
    const Graph& g = s.graph();
    const int n = g.num_vertices();
    const int k = s.k();
    const std::vector<int> conflicting = s.conflicting_set();

    if (s.remainder() != 0) {
        std::vector<int> lower;
        for (int c = 0; c < k; ++c)
            if (!s.in_upper(c)) lower.push_back(c);
        for (int v : conflicting) {
            if (!s.in_upper(s.color_of(v))) continue;
            for (int j : lower)
                visit(Move{Move::Kind::OneMove, v, j, s.delta_1move(v, j)});
        }
    }

    std::vector<char> in_conflict(n, 0);
    for (int v : conflicting) in_conflict[v] = 1;
    for (int v : conflicting) {
        int i = s.color_of(v);
        for (int u = 0; u < n; ++u) {
            int j = s.color_of(u);
            if (j == i) continue;
            if (i < j || !in_conflict[u])
                visit(Move{Move::Kind::Exchange, v, u, s.delta_2exchange(v, u)});
        }
    }
}

std::vector<Move> enumerate_neighborhood(const Partition& s);

// Uniformly random move among the minimum-delta admissible neighbors; a move
// is admissible when its resulting features are not tabu, or by aspiration
// when it strictly beats best_so_far. When everything is tabu, falls back to
// the overall minimum-delta move. Empty neighborhood gives nullopt.
std::optional<Move> best_admissible_move(const Partition& s, const TabuList& list,
                                         long long iteration, int best_so_far, Rng& rng);

struct SearchResult {
    Partition best;
    int best_objective = 0;
    long long iterations_run = 0;
    long long iterations_to_best = 0;
    double elapsed_seconds = 0.0;
    bool solved = false;
};

// TabuEqCol main loop: repeatedly applies the best admissible move, storing
// the feature (v, former color) with tenure alpha*|C(s)| + Random(beta)
// measured on the solution being left. Stops on f = 0 or the given bounds.
SearchResult tabu_eqcol(const Graph& g, int k, const Partition& s0,
                        const TenureParams& params, const StopCondition& stop, Rng& rng);

}  // namespace eqcol
