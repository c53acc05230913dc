#pragma once

#include <cstddef>
#include <functional>

namespace horo {

/// Worker count: hardware concurrency capped by the HOROTOMO_THREADS
/// environment variable (values < 1 mean serial).
int max_threads();

/// Runs body(i) for i in [0, count).  Bodies must be independent; results
/// should be written to pre-sized slots so the output order is deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace horo
