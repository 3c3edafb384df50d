// Block schedule for graph population: connections are folded into the graph
// in blocks of sigma, and every connection reads its features off the snapshot
// at its block's boundary index.
#pragma once

#include <cstdint>

namespace flowgraph {

class BlockSchedule {
public:
    // Requires 1 <= sigma <= n; throws Error otherwise.
    BlockSchedule(std::int64_t sigma, std::int64_t n);

    std::int64_t sigma() const { return sigma_; }
    std::int64_t n() const { return n_; }

    // Boundary index phi for connection i (0-based): the last connection index
    // folded into the graph this connection is scored against. With g(i) =
    // ceil(i / sigma), phi = sigma * g(i) - 1 while g(i) < ceil(n / sigma),
    // and n - 1 in the final block. phi(0) is always -1: the first connection
    // is scored against the empty graph, which maps to the all-unseen feature
    // vector downstream. Throws Error when i is outside [0, n).
    std::int64_t block_index(std::int64_t i) const;

    // Number of distinct boundary values over i = 0..n-1 (counting the empty
    // graph at phi = -1).
    std::int64_t block_count() const;

private:
    std::int64_t sigma_;
    std::int64_t n_;
};

}  // namespace flowgraph
