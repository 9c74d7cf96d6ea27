#pragma once

#include <cstddef>
#include <functional>

namespace dirac_shell {

/// Worker count: DIRAC_SHELL_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over worker_count() threads. Iterations must be
/// independent; the first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace dirac_shell
