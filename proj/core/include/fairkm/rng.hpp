#pragma once

#include <cstdint>
#include <random>

namespace fairkm {

// All randomized components draw from this engine through the helpers below.
// std::*_distribution is implementation-defined, so uniform draws are derived
// from raw 64-bit output directly; identical seeds give identical streams on
// any platform.
using Rng = std::mt19937_64;

inline double uniform_double(Rng& rng) {
    // 53 mantissa bits, result in [0, 1).
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_double(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_double(rng);
}

// Uniform integer in [lo, hi], rejection-sampled to avoid modulo bias.
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return rng();  // full range
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + x % span;
}

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
    return static_cast<long long>(
        uniform_u64(rng, 0, static_cast<std::uint64_t>(hi - lo))) + lo;
}

// Derives an independent stream for sub-tasks (bench trials, per-instance
// seeds) from a master seed; splitmix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace fairkm
