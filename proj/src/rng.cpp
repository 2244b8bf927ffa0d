#include "schwarz/rng.hpp"

#include <cmath>
#include <numbers>

namespace schwarz {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0xA0761D6478BD642FULL + index * 0xE7037ED1A0B428DBULL);
    std::uint64_t mixed = splitmix64(state);
    return splitmix64(state) ^ mixed;
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    gen_.seed(splitmix64(state));
}

double Rng::uniform01() {
    // 53 random bits -> [0, 1)
    return double(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

Cx Rng::unit_disk() {
    double r = std::sqrt(uniform01());
    double theta = 2.0 * std::numbers::pi * uniform01();
    return Cx{r * std::cos(theta), r * std::sin(theta)};
}

Cx Rng::phase(double modulus) {
    double theta = 2.0 * std::numbers::pi * uniform01();
    return Cx{modulus * std::cos(theta), modulus * std::sin(theta)};
}

}  // namespace schwarz
