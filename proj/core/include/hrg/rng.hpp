#pragma once

#include <cstdint>
#include <random>

namespace hrg {

/// Engine used everywhere randomness is needed. mt19937_64 has a fully
/// specified algorithm, so sequences are reproducible across builds.
using Rng = std::mt19937_64;

/// splitmix64 finalizer; decorrelates nearby seed values.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic per-stream seed derived from a master seed. Used so that
/// replicate i of a command sees an independent stream while the whole run
/// stays a function of the single user-facing seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix_seed(master ^ mix_seed(stream));
}

} // namespace hrg
