#include <doctest.h>

#include <set>

#include "perc/rng.hpp"

using perc::Rng;
using perc::mix64;

TEST_CASE("streams replay bit-identically from the same seed") {
    Rng a(mix64(42, 7));
    Rng b(mix64(42, 7));
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("mixing separates nearby seed/index pairs") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 16; ++s)
        for (std::uint64_t t = 0; t < 64; ++t) seen.insert(mix64(s, t));
    CHECK(seen.size() == 16 * 64);
}

TEST_CASE("bounded draws stay in range and hit every residue") {
    Rng r(123);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t x = r.next_below(7);
        REQUIRE(x < 7);
        seen.insert(x);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("doubles live in [0,1)") {
    Rng r(99);
    for (int i = 0; i < 10000; ++i) {
        const double x = r.next_double();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
}
