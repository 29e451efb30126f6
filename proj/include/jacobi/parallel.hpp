#pragma once

#include <cstddef>
#include <functional>

namespace jacobi {

// Worker count from JACOBI_THREADS; defaults to the hardware concurrency.
unsigned thread_count();

// Calls fn(i) for i in [0, n) across thread_count() workers. Each index is
// visited exactly once, so callers that write fn's result into slot i get an
// order that does not depend on scheduling. The first exception thrown by
// any worker is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace jacobi
