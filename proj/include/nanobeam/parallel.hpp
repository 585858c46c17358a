#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace nanobeam {

/// Selects the serial reference loop or the OpenMP kernel for ensemble work.
enum class Execution { Serial, Parallel };

/// Applies NANOBEAM_THREADS (if set) to the OpenMP runtime; returns the thread count in use.
int configure_threads_from_env();

/// Runs body(i) for i in [0, n). The parallel path uses a dynamic schedule; if any call
/// throws, the exception from the lowest index is rethrown after the loop.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& body);

/// Pairwise (cascade) summation in a fixed order, independent of thread count.
double pairwise_sum(std::span<const double> values);

}  // namespace nanobeam
