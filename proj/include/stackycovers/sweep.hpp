#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stacky {

// Sweeps evaluate independent tuples; the parallel path fans them out
// with OpenMP while the serial path is the reference the tests compare
// against. Results are written into index-addressed slots, so output is
// identical under either mode and any scheduling.
enum class ExecMode { Serial, Parallel };

template <typename Fn>
void sweep_for_each(long long count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long i = 0; i < count; ++i) fn(i);
  } else {
    for (long long i = 0; i < count; ++i) fn(i);
  }
}

inline int sweep_thread_count(ExecMode mode) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) return omp_get_max_threads();
#endif
  (void)mode;
  return 1;
}

}  // namespace stacky
