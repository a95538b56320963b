#pragma once

#include <cstddef>
#include <functional>

namespace perc {

// Runs fn(0) .. fn(count-1) over `workers` threads pulling from a shared
// atomic counter. Tasks must not share mutable state; results land wherever
// each task writes, so output order is whatever the caller indexes by. The
// first exception thrown by any task is rethrown after the pool joins.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace perc
