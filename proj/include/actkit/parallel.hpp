#pragma once

#include <cstddef>
#include <functional>

namespace actkit {

// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware
// concurrency). The first exception thrown by any task is rethrown on the
// caller thread after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace actkit
