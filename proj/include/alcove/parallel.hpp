#pragma once

#include <cstdint>
#include <functional>

namespace alcove {

// Runs fn(i) for i in [0, n).  With parallel=true the iterations are
// distributed over OpenMP threads; iterations must therefore write only to
// disjoint slots.  With parallel=false this is a plain loop and serves as
// the serial reference path.
void parallel_for(std::int64_t n, bool parallel,
                  const std::function<void(std::int64_t)>& fn);

int max_threads();

}  // namespace alcove
