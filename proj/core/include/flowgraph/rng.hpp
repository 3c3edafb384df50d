// Seeded randomness helpers. mt19937_64 plus rejection sampling keeps every
// draw identical across platforms and standard libraries.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace flowgraph {

// Uniform draw from [0, n). Rejection method, no modulo bias.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    for (;;) {
        std::uint64_t v = rng();
        if (v < limit) return v % n;
    }
}

template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace flowgraph
