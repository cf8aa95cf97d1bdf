#pragma once

#include <exception>

namespace legendrian {

enum class Execution { Serial, Parallel };

/// body(k) for k in [0, count). The parallel branch uses OpenMP; the first exception thrown
/// by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(long count, Execution mode, Body&& body) {
  if (mode == Execution::Serial) {
    for (long k = 0; k < count; ++k) body(k);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(legendrian_parallel_for)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace legendrian
