// Deterministic chunked parallel-for. Work is split into ranges whose
// boundaries depend only on the item count, so any reduction done per chunk
// and merged in chunk order is independent of the worker count.
#pragma once

#include <cstddef>
#include <functional>

namespace flowgraph {

// Worker count resolution: explicit value if > 0, else the
// FLOWGRAPH_WORKERS environment variable, else hardware concurrency.
int resolve_workers(int explicit_count = 0);

// Chunk width used by parallel_for for a given item count. A range handed to
// fn always starts at a multiple of this width, so chunk index = begin / width.
std::size_t parallel_chunk_size(std::size_t count);

std::size_t parallel_chunk_count(std::size_t count);

// Invokes fn(begin, end) for consecutive subranges of [0, count).
// With workers <= 1 everything runs inline on the calling thread.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace flowgraph
