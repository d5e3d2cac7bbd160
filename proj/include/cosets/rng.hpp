#pragma once

#include <cstdint>
#include <random>

#include "cosets/bitvec.hpp"

namespace cosets {

// Reproducible randomness. Experiments key every draw to (seed, stream):
// stream s uses an mt19937_64 engine (fully specified by the standard,
// so sequences are identical across platforms and runs) seeded with the
// s-th output of a SplitMix64 sequence started at `seed`. Substreams are
// random-access, which keeps Monte Carlo results independent of worker
// count and lets partial reruns reproduce any sample.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + stream * 0x9e3779b97f4a7c15ull);
}

inline std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(stream_key(seed, stream));
}

/// n uniform bits drawn as raw engine words (no std distributions; those
/// are implementation-defined and would break reproducibility).
inline BitVector random_bits(std::mt19937_64& eng, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; i += 64) {
        std::uint64_t w = eng();
        for (std::size_t j = i; j < n && j < i + 64; ++j)
            if ((w >> (j - i)) & 1u) v.set(j, true);
    }
    return v;
}

}  // namespace cosets
