#pragma once

#include <cstddef>
#include <functional>

namespace gausspack {

/// Worker count for internal grid loops: GAUSSPACK_THREADS when set to a
/// positive integer, otherwise the hardware concurrency.
unsigned thread_count();

/// Calls body(i) for i in [0, n). Each index is touched by exactly one
/// worker, so results never depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gausspack
