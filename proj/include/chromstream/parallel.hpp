#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>

namespace chromstream {

// Execution policy for data-parallel kernels. `serial` is the reference
// path; `parallel` runs the same per-index body under OpenMP and must give
// identical results.
enum class Execution { serial, parallel };

// Calls body(i) for i in [0, count). Under `parallel` the first exception
// thrown by any index is rethrown after the loop.
template <typename Body>
void for_each_index(Execution exec, std::size_t count, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(chromstream_for_each_index)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace chromstream
