#pragma once

#include <cstddef>
#include <functional>

namespace qh {

/// Worker count: QH_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
/// visited by exactly one worker, so per-index results do not depend on the
/// thread count.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t begin, std::size_t end)>& body);

}  // namespace qh
