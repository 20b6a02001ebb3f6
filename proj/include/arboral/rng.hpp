#pragma once

// Seeded randomness helpers. Everything routes through mt19937_64 plus a
// rejection-sampled bounded draw, so streams are reproducible across
// platforms and standard library implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "arboral/geometry.hpp"

namespace arboral {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound), bound >= 1.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = engine_();
            if (x >= threshold)
                return x % bound;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i)
            std::swap(values[i - 1], values[bounded(i)]);
    }

private:
    std::mt19937_64 engine_;
};

inline std::vector<Key> random_permutation(std::int64_t n, Rng& rng) {
    std::vector<Key> perm(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(perm);
    return perm;
}

}  // namespace arboral
