#pragma once

#include <cstddef>
#include <functional>

namespace kgbound {

/// Worker count from KGBOUND_THREADS (unset or 0 means hardware concurrency).
unsigned thread_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace kgbound
