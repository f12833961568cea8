#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace oscriesz {

// Every sweep driver takes an ExecMode so the serial path stays available as a
// reference implementation; results must be bit-identical between the two.
enum class ExecMode { serial, parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#if defined(_OPENMP)
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Runs body(i) for i in [0, n). Cells must be independent; callers merge
// results by index afterwards so the output does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, ExecMode mode, F&& body) {
#if defined(_OPENMP)
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace oscriesz
