#pragma once

#include <cstdint>

namespace perc {

// Counter-based seeding: every consumer derives its stream from
// mix(master_seed, index), so trials can run in any order on any number of
// workers and still replay bit-identically.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ mix64(b));
}

// splitmix64 stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound) via 128-bit multiply-high (bias < 2^-64).
    std::uint64_t next_below(std::uint64_t bound) {
        const unsigned __int128 m =
            static_cast<unsigned __int128>(next_u64()) * bound;
        return static_cast<std::uint64_t>(m >> 64);
    }

  private:
    std::uint64_t state_;
};

}  // namespace perc
