#pragma once

#include <cstddef>
#include <functional>

namespace bandlimit {

// Worker count for parallel assembly loops. 0 means "all cores".
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(i) for i in [0, n) on thread_count() workers. Each index is
// visited exactly once; the first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace bandlimit
