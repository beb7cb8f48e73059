#pragma once

#include <vector>

#include "eqcol/partition.hpp"
#include "eqcol/rng.hpp"

namespace eqcol {

// Greedy equitable constructor: places the unassigned vertices in a uniformly
// random order, each into the smallest-index class that stays under the
// running equity cap and holds no neighbor; when no such class exists the
// class is drawn uniformly among those under the cap. Always yields an
// equity-satisfying partition (f may be positive).
//
// partial, when given, maps vertices to classes with -1 for unassigned; it
// must respect the equity caps (no class above floor(n/k)+1 and at most
// n mod k classes above floor(n/k)).
Partition procedure1(const Graph& g, int k, Rng& rng,
                     const std::vector<int>& partial = {});

// Seeds a k-partition from a known proper equitable (k+1)-coloring: a random
// permutation picks k of its classes to keep verbatim, the vertices of the
// dropped class are completed by the procedure1 placement loop.
Partition procedure2(const Graph& g, int k, const Partition& prev, Rng& rng);

// First equitable coloring: escalates k from the color count of a plain
// greedy coloring (vertices by decreasing degree, ties by index) until the
// equitable placement loop comes out conflict-free. Terminates at k = n at
// the latest.
Partition naive(const Graph& g, Rng& rng);

}  // namespace eqcol
