#pragma once

#include <functional>

namespace taufan {

// TAUFAN_THREADS if set (positive integer), otherwise the hardware count.
int thread_count();

// Runs body(0..n-1) on a small pool; the first exception is rethrown.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace taufan
