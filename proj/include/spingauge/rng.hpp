#pragma once

#include <cstdint>
#include <random>

// Seeded randomness helpers. Values are extracted straight from the
// mt19937_64 word stream, which the standard pins down exactly, so fixtures
// generated here are reproducible across compilers and platforms.

namespace spingauge {

using Rng = std::mt19937_64;

inline std::uint64_t fair_bit(Rng& g) { return g() & 1u; }

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// splitmix64 step; used to spread one user seed into well-separated
// per-stream seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace spingauge
