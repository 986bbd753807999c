#include "alcove/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace alcove {

void parallel_for(std::int64_t n, bool parallel,
                  const std::function<void(std::int64_t)>& fn) {
#ifdef _OPENMP
  if (parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace alcove
