#pragma once

#include <cstddef>

namespace schwarz {

// Worker count for parallel sections: SCHWARZ_BOUNDS_THREADS caps it, 0 or
// unset means all hardware threads. Always >= 1. Results never depend on the
// worker count.
std::size_t thread_budget();

}  // namespace schwarz
