#pragma once

// Deterministic seeded randomness. Doubles are extracted from raw 64-bit draws
// so sequences do not depend on the standard library's distribution
// implementations.

#include <cstdint>
#include <random>

#include "schwarz/power_series.hpp"

namespace schwarz {

std::uint64_t splitmix64(std::uint64_t& state);

// Mix a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    // Independent stream for (seed, index); streams for distinct indices do
    // not overlap in practice.
    static Rng derived(std::uint64_t seed, std::uint64_t index) { return Rng(derive_seed(seed, index)); }

    double uniform01();                       // [0, 1)
    double uniform(double lo, double hi);
    Cx unit_disk();                           // area-uniform on |z| <= 1
    Cx phase(double modulus);                 // uniform phase at given modulus

private:
    std::mt19937_64 gen_;
};

}  // namespace schwarz
