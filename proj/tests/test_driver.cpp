#include <doctest.h>

#include "eqcol/driver.hpp"
#include "support/testgraphs.hpp"

using namespace eqcol;

TEST_CASE("brute_force_chi_eq on known graphs") {
    CHECK(brute_force_chi_eq(testgraphs::complete(4)) == 4);
    CHECK(brute_force_chi_eq(testgraphs::cycle(5)) == 3);
    // star K1,4: the center forces its class small, 3 classes balance 4 leaves
    CHECK(brute_force_chi_eq(testgraphs::star(4)) == 3);
    CHECK(brute_force_chi_eq(testgraphs::edgeless(6)) == 1);
    CHECK_THROWS_AS(brute_force_chi_eq(testgraphs::edgeless(13)), std::invalid_argument);
}

TEST_CASE("brute force respects the max-degree + 1 bound") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = testgraphs::random_gnp(8, 0.25 * (seed % 3 + 1), seed);
        CHECK(brute_force_chi_eq(g) <= g.max_degree() + 1);
    }
}

TEST_CASE("solve_descending on trivial instances") {
    Rng rng(1);
    Graph e6 = testgraphs::edgeless(6);
    SolveReport r = solve_descending(e6, 1, {0.9, 5}, 5.0, rng);
    CHECK(r.best_k == 1);
    CHECK(verify_eqcol(e6, r.best_coloring));
}

TEST_CASE("solve_descending reaches chi_eq of C5") {
    Graph c5 = testgraphs::cycle(5);
    Rng rng(3);
    SolveReport r = solve_descending(c5, 3, {0.9, 5}, 5.0, rng);
    CHECK(r.best_k == 3);
    CHECK(r.best_coloring.k() == 3);
    CHECK(verify_eqcol(c5, r.best_coloring));
    CHECK(r.status == "ok");
}

TEST_CASE("solve_descending schedule is strictly decreasing and verified") {
    Graph g = testgraphs::random_gnp(16, 0.5, 11);
    Rng rng(11);
    SolveReport r = solve_descending(g, 1, {0.9, 5}, 5.0, rng);
    CHECK(verify_eqcol(g, r.best_coloring));
    CHECK(r.best_k == r.best_coloring.k());
    CHECK(r.best_k >= r.lower_bound_used);
    for (std::size_t i = 0; i + 1 < r.schedule.size(); ++i) {
        CHECK(r.schedule[i].k > r.schedule[i + 1].k);
        CHECK(r.schedule[i].k == r.schedule[i + 1].k + 1);
    }
    // every successful attempt lowered k by exactly one from the incumbent
    int expected = r.initial_k;
    for (const auto& e : r.schedule) {
        CHECK(e.k == expected - 1);
        if (!e.result.solved) break;
        expected = e.k;
    }
}

TEST_CASE("lower bound above the naive coloring returns it unchanged") {
    Graph e6 = testgraphs::edgeless(6);  // naive gives k = 1
    Rng rng(1);
    SolveReport r = solve_descending(e6, 4, {0.9, 5}, 5.0, rng);
    CHECK(r.best_k == 1);
    CHECK(r.schedule.empty());
    CHECK(r.status != "ok");
}

TEST_CASE("descending driver agrees with the oracle on seeded small graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        double p = 0.3 + 0.2 * static_cast<double>(seed % 3);
        Graph g = testgraphs::random_gnp(7, p, seed);
        int expected = brute_force_chi_eq(g);
        Rng rng(seed);
        SolveReport r = solve_descending(g, 1, {0.9, 5}, 3.0, rng);
        CHECK(r.best_k == expected);
    }
}
