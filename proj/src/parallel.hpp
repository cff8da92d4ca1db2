#pragma once
// Parallel loop over [0, n) that carries exceptions out of the OpenMP
// region. If several iterations throw, the one with the lowest index is
// rethrown, so the reported error does not depend on scheduling.
#include <cstdint>
#include <exception>

namespace glab::detail {

template <class Body>
void parallel_for_index(std::int64_t n, bool parallel, Body&& body) {
  std::exception_ptr error;
  std::int64_t error_index = n;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(glab_parallel_error)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace glab::detail
