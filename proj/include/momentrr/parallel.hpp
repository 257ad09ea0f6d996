#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace momentrr {

/// Execution policy for the per-vertex, per-edge and per-class kernels.
/// Serial is the reference path; Parallel distributes independent indices
/// over OpenMP threads and produces identical results.
enum class Exec { Serial, Parallel };

/// Calls body(i) for every i in [0, n). If iterations throw, the exception
/// of the smallest failing index is rethrown after the loop, so errors are
/// reported identically under both policies.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body &&body) {
#ifdef MOMENTRR_HAVE_OPENMP
  if (exec == Exec::Parallel && n > 1) {
    std::exception_ptr failure;
    long failed_at = -1;
    std::mutex guard;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure || i < failed_at) {
          failure = std::current_exception();
          failed_at = i;
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace momentrr
