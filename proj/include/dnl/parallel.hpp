#pragma once

#include <cstddef>
#include <functional>

namespace dnl {

/// Worker count for analysis-side parallel loops: DNL_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
unsigned thread_budget();

/// Runs body(k) for k in [0, count) on up to thread_budget() threads.
/// Each k is executed exactly once; results must not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dnl
