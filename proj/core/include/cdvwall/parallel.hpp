#pragma once

#include <cstddef>
#include <functional>

namespace cdvwall {

// CDVWALL_THREADS if set and positive, else the hardware concurrency (at least 1)
std::size_t worker_count();

// runs body(i) for i in [0, n) on at most worker_count() threads; each index
// is handled exactly once, results must be written to per-index slots.  The
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cdvwall
