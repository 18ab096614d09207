#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace decplan::rng {

// splitmix64 finalizer, used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic hierarchical seed split: every (seed, path) pair yields an
/// independent generator, so concurrent work items never share rng state.
inline std::mt19937_64 substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(seed);
    for (std::uint64_t p : path) {
        s = mix64(s ^ mix64(p));
    }
    return std::mt19937_64(s);
}

} // namespace decplan::rng
