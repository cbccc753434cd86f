#include <doctest.h>

#include "perc/union_find.hpp"

using perc::WindingUnionFind;

namespace {
const std::int8_t kZero[4] = {0, 0, 0, 0};
const std::int8_t kPlusX[4] = {1, 0, 0, 0};
const std::int8_t kPlusY[4] = {0, 1, 0, 0};
}  // namespace

TEST_CASE("merge count equals nodes minus components") {
    WindingUnionFind uf;
    uf.reset(10, 1, nullptr);
    uf.add_edge(0, 1, kZero);
    uf.add_edge(1, 2, kZero);
    uf.add_edge(0, 2, kZero);  // cycle, no merge
    uf.add_edge(4, 5, kZero);
    CHECK(uf.merge_count() == 3);
    std::size_t components = 0;
    for (std::uint32_t v = 0; v < 10; ++v)
        if (uf.find(v) == v) ++components;
    CHECK(10 - components == uf.merge_count());
}

TEST_CASE("a ring wraps exactly when the closing edge is added") {
    // 1D ring of 5 cells, one node per cell; +x edges
    WindingUnionFind uf;
    uf.reset(5, 1, nullptr);
    std::uint32_t wrapped = 0;
    for (std::uint32_t i = 0; i + 1 < 5; ++i) {
        uf.add_edge(i, i + 1, kPlusX, &wrapped);
        CHECK(wrapped == 0);
    }
    uf.add_edge(4, 0, kPlusX, &wrapped);
    CHECK(wrapped == 1);
    CHECK(uf.component_wraps(uf.find(0)) == 1);
}

TEST_CASE("a contractible cycle on the torus does not wrap") {
    // 2x2 torus, nodes (i,j) -> 2i+j; going around a plaquette with the
    // displacements of a non-wrapping square
    WindingUnionFind uf;
    uf.reset(4, 2, nullptr);
    std::uint32_t wrapped = 0;
    const std::int8_t minus_x[2] = {-1, 0};
    const std::int8_t minus_y[2] = {0, -1};
    uf.add_edge(0, 2, kPlusX, &wrapped);   // (0,0)->(1,0)
    uf.add_edge(2, 3, kPlusY, &wrapped);   // (1,0)->(1,1)
    uf.add_edge(3, 1, minus_x, &wrapped);  // (1,1)->(0,1)
    CHECK(wrapped == 0);
    uf.add_edge(1, 0, minus_y, &wrapped);  // closes the contractible square
    CHECK(wrapped == 0);
    // now close a genuinely winding path in x: (0,0)->(1,0) with +x again
    uf.add_edge(2, 0, kPlusX, &wrapped);
    CHECK(wrapped == 1);
}

TEST_CASE("colored counts aggregate across merges") {
    const std::uint8_t colors[4] = {1, 0, 0, 1};
    WindingUnionFind uf;
    uf.reset(4, 1, colors);
    uf.add_edge(0, 1, kZero);
    uf.add_edge(2, 3, kZero);
    CHECK(uf.component_colored(uf.find(0)) == 1);
    CHECK(uf.component_colored(uf.find(3)) == 1);
    uf.add_edge(1, 2, kZero);
    CHECK(uf.component_colored(uf.find(0)) == 2);
    CHECK(uf.component_size(uf.find(0)) == 4);
}
