#pragma once

#include <cstddef>
#include <functional>

namespace decaylab::detail {

/// Worker count: min(hardware_concurrency, DECAYLAB_THREADS) with a floor of 1.
int max_threads();

/// Runs body(i) for i in [0, n), statically partitioned across threads.
/// Each index owns its output slot, so results are identical to a serial run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace decaylab::detail
