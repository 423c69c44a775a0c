#pragma once

#include <cstddef>
#include <functional>

namespace hyperlp {

// Worker count used by parallel_for. Zero means "use the default", which is
// HYPERLP_THREADS when set, otherwise std::thread::hardware_concurrency().
void set_thread_count(std::size_t threads);
std::size_t thread_count();

// Calls body(i) for every i in [0, count). Iterations are split into
// contiguous chunks, one per worker; body must only write to slots owned by i.
// The first exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hyperlp
