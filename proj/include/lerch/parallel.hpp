#pragma once

#include <cstddef>
#include <functional>

namespace lerch {

// Worker count: LERCH_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads.
// Callers write results by index, so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lerch
