#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace eqcol {

// Seeded mt19937_64 with hand-rolled bounded draws so that identical seeds
// give identical sequences on every platform (std::uniform_int_distribution
// is not portable across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform integer in [lo, hi], inclusive
    int uniform(int lo, int hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi) - lo + 1;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<int>(x % range);
    }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (int i = static_cast<int>(xs.size()) - 1; i > 0; --i) {
            int j = uniform(0, i);
            std::swap(xs[i], xs[static_cast<std::size_t>(j)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace eqcol
