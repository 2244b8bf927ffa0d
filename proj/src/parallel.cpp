#include "schwarz/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace schwarz {

std::size_t thread_budget() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SCHWARZ_BOUNDS_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return std::size_t(v);
        } catch (...) {
            // fall through to auto
        }
    }
    return hw;
}

}  // namespace schwarz
