#pragma once

// Grid reductions with a serial reference path and an OpenMP path.
// Both visit every point; the parallel path must agree with the serial one
// bit for bit for max-reductions (max is order independent).

#include <algorithm>
#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace sasaki {

enum class Execution { serial, parallel };

// max_i f(i) for i in [0, count); 0 when count == 0.
template <class F>
double max_over_serial(std::size_t count, F&& f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, static_cast<double>(f(i)));
  return worst;
}

template <class F>
double max_over_parallel(std::size_t count, F&& f) {
  double worst = 0.0;
  std::exception_ptr error;
  const long n = static_cast<long>(count);
#pragma omp parallel for reduction(max : worst) schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      worst = std::max(worst, static_cast<double>(f(static_cast<std::size_t>(i))));
    } catch (...) {
#pragma omp critical(sasaki_grid_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return worst;
}

template <class F>
double max_over(std::size_t count, F&& f, Execution ex) {
  return ex == Execution::parallel ? max_over_parallel(count, f) : max_over_serial(count, f);
}

// out[i] = f(i), evaluated in parallel or serially.
template <class T, class F>
std::vector<T> map_indices(std::size_t count, F&& f, Execution ex) {
  std::vector<T> out(count);
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr error;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(sasaki_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace sasaki
