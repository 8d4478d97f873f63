#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace rainbench {

/// splitmix64 (Steele, Lea & Flood 2014). Chosen over std::mt19937 because
/// its output stream is fully specified here, so seeded fields reproduce
/// bit-identically across platforms and standard-library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

private:
    std::uint64_t state_;
};

/// Stateless mix of one 64-bit value (the splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives the per-image, per-level seed used by sweeps:
/// mix(global_seed) is folded with the image id (FNV-1a) and the level's
/// IEEE-754 bits, then finalized. Stable across platforms.
inline std::uint64_t hash64(std::uint64_t seed, std::string_view id, double level) {
    std::uint64_t h = mix64(seed);
    for (unsigned char c : id) {
        h = (h ^ c) * 0x100000001b3ULL;  // FNV-1a step
    }
    return mix64(h ^ std::bit_cast<std::uint64_t>(level));
}

} // namespace rainbench
