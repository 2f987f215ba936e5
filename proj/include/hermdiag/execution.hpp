#pragma once

#include <cstddef>
#include <exception>

namespace hermdiag {

/// Execution policy for the row-parallel kernels. `serial` is the reference
/// path; `parallel` distributes independent rows with OpenMP and must give
/// identical results.
enum class Execution { serial, parallel };

int max_threads();

/// Calls fn(i) for i in [0, count). Under `parallel` the iterations are
/// scheduled dynamically (row cost grows with the index). The first
/// exception thrown by any iteration is rethrown on the calling thread.
template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hermdiag_for_each_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace hermdiag
