#include "flowgraph/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace flowgraph {

int resolve_workers(int explicit_count) {
    if (explicit_count > 0) return explicit_count;
    if (const char* env = std::getenv("FLOWGRAPH_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::size_t parallel_chunk_size(std::size_t count) {
    // Boundaries depend on count only, not on the worker count.
    std::size_t chunk = count / 64;
    return chunk < 1 ? 1 : chunk;
}

std::size_t parallel_chunk_count(std::size_t count) {
    if (count == 0) return 0;
    std::size_t chunk = parallel_chunk_size(count);
    return (count + chunk - 1) / chunk;
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t chunk = parallel_chunk_size(count);
    std::size_t nchunks = parallel_chunk_count(count);
    if (workers <= 1 || count == 1) {
        for (std::size_t c = 0; c < nchunks; ++c) {
            std::size_t lo = c * chunk;
            std::size_t hi = lo + chunk < count ? lo + chunk : count;
            fn(lo, hi);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    auto body = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            std::size_t lo = c * chunk;
            std::size_t hi = lo + chunk < count ? lo + chunk : count;
            fn(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    int n = workers;
    if (static_cast<std::size_t>(n) > nchunks) n = static_cast<int>(nchunks);
    for (int i = 1; i < n; ++i) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
}

}  // namespace flowgraph
