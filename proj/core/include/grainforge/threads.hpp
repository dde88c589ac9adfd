#pragma once

#include <cstddef>
#include <functional>

namespace grainforge {

// Worker count: min(hardware_concurrency, GRAINFORGE_THREADS if set), at least 1.
unsigned thread_count();

// Splits [0, n) into contiguous blocks, one per worker; fn(block_index,
// begin, end) runs on its own thread. Deterministic partitioning so callers
// can merge per-block results in index order for bit-for-bit reproducibility.
void parallel_blocks(std::size_t n,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

}  // namespace grainforge
