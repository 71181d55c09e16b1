#pragma once

#include <cstdint>

namespace specturan {

// splitmix64: used both as a stream on its own and to derive independent
// per-trial seeds from a master seed, so thread scheduling cannot change
// any result.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform double in [0, 1), 53-bit resolution; avoids the
    // implementation-defined std distributions for reproducibility
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, bound) via rejection
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t r;
        do { r = next(); } while (r >= limit);
        return r % bound;
    }
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 s(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    s.next();
    return s.next();
}

}  // namespace specturan
