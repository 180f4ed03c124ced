#pragma once

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace horoflow {

/// Execution mode for grid sweeps and trajectory batches.  The serial path is
/// the reference implementation that the parallel path is tested against; the
/// two must produce bit-identical results.
enum class Exec { serial, parallel };

/// Worker count used by Exec::parallel: the HOROFLOW_THREADS environment
/// variable when set to a positive integer, otherwise the OpenMP default
/// (1 when built without OpenMP).
inline int worker_count() {
  if (const char* env = std::getenv("HOROFLOW_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs body(i) for i in [0, n).  Iterations must be independent, must not
/// throw, and must write results only to per-index slots; aggregation happens
/// afterwards in index order so that both modes agree exactly.
template <typename F>
void parallel_for(std::size_t n, Exec mode, F&& body) {
#ifdef _OPENMP
  if (mode == Exec::parallel) {
    const int workers = worker_count();
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace horoflow
