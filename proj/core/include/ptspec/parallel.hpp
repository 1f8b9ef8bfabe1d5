#pragma once

#include <cstddef>
#include <functional>

namespace ptspec {

/// Thread cap resolved from PTSPEC_THREADS (0 or unset = hardware concurrency).
int thread_cap();

/// Runs fn(i) for i in [0, n). Work is split over at most thread_cap()
/// threads; each index writes only its own output slot, so results are
/// identical to a serial run. Nested calls degrade to serial execution.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ptspec
