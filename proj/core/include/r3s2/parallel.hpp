#pragma once

#include <functional>

namespace r3s2 {

/// Worker count: KERNELS_THREADS if set and positive, else
/// hardware_concurrency.
int thread_count();

/// Runs fn(i) for i in [0, n) on up to thread_count() threads with static
/// chunking. Blocks until done; exceptions from workers are rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace r3s2
