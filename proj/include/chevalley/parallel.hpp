#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chevalley {

/// Number of threads the parallel kernels will use.
inline int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Serial reference for parallel_map.
template <class F>
auto serial_map(std::size_t n, F&& f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

/// Evaluates f(0..n-1) across OpenMP threads. Results are returned in index
/// order; the first exception thrown by any f is rethrown after the loop.
template <class F>
auto parallel_map(std::size_t n, F&& f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  std::exception_ptr failure;
  std::mutex failure_lock;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> g(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace chevalley
