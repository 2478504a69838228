#pragma once

#include <cstddef>
#include <functional>

namespace symvi {

/// Worker count: SYMVI_WORKERS when set (>= 1), else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n) on worker threads. Each index owns its output
/// slot, so results are deterministic regardless of scheduling. The first
/// exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace symvi
