#pragma once

// Seeded random draws with an explicit mapping from the raw 64-bit engine
// output. std::uniform_*_distribution is implementation-defined, so the
// same seed could produce different datasets on different standard
// libraries; these helpers pin the mapping.

#include <cstdint>
#include <random>

namespace pgap {

using Engine = std::mt19937_64;

// Uniform in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [low, high). Requires low < high.
inline double uniform_real(Engine& rng, double low, double high)
{
    const double v = low + (high - low) * uniform_unit(rng);
    // rounding can land exactly on high when the span is large
    return v < high ? v : low;
}

// Uniform integer in [low, high] by rejection sampling.
inline std::int64_t uniform_int(Engine& rng, std::int64_t low, std::int64_t high)
{
    const std::uint64_t span = static_cast<std::uint64_t>(high - low) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng()); // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return low + static_cast<std::int64_t>(r % span);
}

inline bool bernoulli(Engine& rng, double p)
{
    return uniform_unit(rng) < p;
}

} // namespace pgap
