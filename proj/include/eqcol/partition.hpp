#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "eqcol/graph.hpp"

namespace eqcol {

// Equity-constrained k-partition of the vertices with incremental conflict
// bookkeeping. gamma[v][c] counts neighbors of v in class c, which makes both
// move deltas O(1) and move application O(deg).
//
// Class sizes are always floor(n/k) or floor(n/k)+1, with exactly r = n mod k
// classes of the larger size. Construction rejects anything else.
class Partition {
public:
    Partition() = default;  // empty placeholder; only from_assignment yields a usable one

    static Partition from_assignment(const Graph& g, int k, std::vector<int> color_of);

    const Graph& graph() const { return *g_; }
    int k() const { return k_; }
    int color_of(int v) const { return color_of_[v]; }
    int class_size(int c) const { return class_size_[c]; }
    int objective() const { return objective_; }

    int floor_size() const { return base_; }    // floor(n/k)
    int remainder() const { return r_; }        // n mod k = |W+|
    bool in_upper(int c) const { return class_size_[c] == base_ + 1; }

    int gamma(int v, int c) const { return gamma_[static_cast<std::size_t>(v) * k_ + c]; }

    // C(s): vertices with at least one same-class neighbor, ascending.
    std::vector<int> conflicting_set() const;
    int num_conflicting() const;

    // (W+, W-): classes of size floor+1 and floor, ascending.
    std::pair<std::vector<int>, std::vector<int>> equity_sets() const;

    // f(s') - f(s) for moving v to class j. Does not mutate.
    int delta_1move(int v, int j) const;

    // f(s') - f(s) for swapping the colors of v and u. Does not mutate.
    int delta_2exchange(int v, int u) const;

    // Moves v from its class (must be in W+) to class j (must be in W-).
    void apply_1move(int v, int j);

    // Swaps the colors of v and u (must differ).
    void apply_2exchange(int v, int u);

    // From-scratch recomputation of f(s), for checking against the cache.
    int recompute_objective() const;

private:
    const Graph* g_ = nullptr;
    int k_ = 0;
    int base_ = 0;
    int r_ = 0;
    std::vector<int> color_of_;
    std::vector<int> class_size_;
    std::vector<int> gamma_;  // n * k
    int objective_ = 0;
};

// true iff s is a proper coloring (f = 0) satisfying equity, i.e. a k-eqcol.
bool verify_eqcol(const Graph& g, const Partition& s);

// Coloring file format: header "s <k> <f>", then one "<vertex> <color>" line
// per vertex, both 1-based.
void write_coloring(std::ostream& os, const Partition& s);

struct ColoringFile {
    int k = 0;
    long long f = 0;
    std::vector<int> color_of;  // 0-based
};

ColoringFile read_coloring(std::istream& in);

}  // namespace eqcol
