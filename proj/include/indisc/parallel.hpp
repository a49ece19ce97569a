#pragma once

#include <cstddef>
#include <functional>

namespace indisc {

/// Worker cap. Defaults to INDISC_THREADS when set, else hardware concurrency.
/// Only affects speed: every parallel loop writes results by index.
std::size_t thread_limit();
/// Overrides the cap for this process (0 restores the environment default).
void set_thread_limit(std::size_t n);

/// Calls fn(i) for every i in [0, count), split into contiguous chunks across
/// at most thread_limit() threads. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace indisc
