#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dermeda {

using Rng = std::mt19937_64;

/// Independent generator for a named component of a run. Each component draws
/// from its own stream so changing one operator does not shift the others.
inline Rng make_stream(std::uint64_t seed, std::string_view name)
{
    // FNV-1a over the stream name
    std::uint64_t tag = 1469598103934665603ULL;
    for (char c : name) {
        tag ^= static_cast<unsigned char>(c);
        tag *= 1099511628211ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
    return Rng(seq);
}

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

} // namespace dermeda
