#pragma once

#include <cstddef>
#include <functional>

namespace drcskit {

// Worker count: DRCS_THREADS caps parallelism, 0 or unset means hardware
// concurrency, 1 disables threading.
unsigned thread_budget();

// Runs fn(begin, end) over a deterministic chunking of [0, n). Callers keep
// determinism by writing to disjoint slots and reducing in index order.
void parallel_for_chunks(
    std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace drcskit
