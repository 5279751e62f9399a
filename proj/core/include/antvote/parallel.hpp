#pragma once

#include <cstddef>
#include <functional>

namespace antvote {

// Worker count used by parallel loops: the ANTVOTE_THREADS environment
// variable if set (minimum 1), otherwise the hardware concurrency.
unsigned worker_count();

// Runs fn(i) for i in [0, count) across workers.  Results must be written
// to pre-sized storage indexed by i, so the outcome is identical for any
// worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace antvote
