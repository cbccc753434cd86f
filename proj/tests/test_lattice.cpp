#include <doctest.h>

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "perc/lattice.hpp"

using namespace perc::lattice;

namespace {

// shortest cycle through a node, ignoring parallel-edge 2-cycles
int shortest_cycle_through(const Lattice &lat, std::uint32_t start) {
    std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        adj[lat.edge_a[e]].push_back(lat.edge_b[e]);
        adj[lat.edge_b[e]].push_back(lat.edge_a[e]);
    }
    int best = 1 << 30;
    for (const std::uint32_t first : adj[start]) {
        std::map<std::uint32_t, int> dist{{first, 1}};
        std::queue<std::uint32_t> q;
        q.push(first);
        bool skipped_direct = false;
        while (!q.empty()) {
            const std::uint32_t u = q.front();
            q.pop();
            for (const std::uint32_t v : adj[u]) {
                if (u == first && v == start && !skipped_direct) {
                    skipped_direct = true;  // do not reuse the outgoing edge
                    continue;
                }
                if (v == start) {
                    best = std::min(best, dist[u] + 1);
                    continue;
                }
                if (!dist.count(v)) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
            }
        }
    }
    return best;
}

std::map<int, std::size_t> degree_histogram(const Lattice &lat) {
    return validate(lat).degree_histogram;
}

}  // namespace

TEST_CASE("square lattice census") {
    const Lattice lat = build_named("square-2d", {4, 4});
    CHECK(lat.num_nodes == 16);
    CHECK(lat.num_edges() == 32);
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram == std::map<int, std::size_t>{{4, 16}});
    CHECK(rep.color_census == std::map<int, std::size_t>{{1, 16}});
}

TEST_CASE("square lattice at 64x64 is connected with uniform degree") {
    const ValidationReport rep = validate(build_named("square-2d", {64, 64}));
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram == std::map<int, std::size_t>{{4, 4096}});
}

TEST_CASE("two-layer logical square census") {
    const Lattice lat = build_named("two-layer-logical-square", {6, 6});
    CHECK(lat.num_nodes == 3 * 36);
    CHECK(lat.num_edges() == 4 * 36);
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram ==
          std::map<int, std::size_t>{{2, 36}, {3, 72}});
    CHECK(rep.color_census == std::map<int, std::size_t>{{0, 72}, {1, 36}});
    CHECK(rep.kind_census.at("green") == 72);
    CHECK(rep.kind_census.at("blue") == 72);
}

TEST_CASE("standard (10,3)-b: degree 3 everywhere and girth 10") {
    const Lattice lat = build_named("b103-standard-3d", {6, 6, 6});
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram ==
          std::map<int, std::size_t>{{3, lat.num_nodes}});
    // (10,3): shortest cycles have length 10 (extent 6 keeps wrap cycles longer)
    CHECK(shortest_cycle_through(lat, 0) == 10);
    CHECK(shortest_cycle_through(lat, 5) == 10);
}

TEST_CASE("modified (10,3)-b 3D census") {
    const Lattice lat = build_named("b103-mod-3d", {4, 4, 4});
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    // one third degree-2 red, two thirds degree-3 black
    CHECK(rep.degree_histogram.at(2) * 2 == rep.degree_histogram.at(3));
    CHECK(rep.color_census.at(1) * 2 == rep.color_census.at(0));
    // red nodes sit only on blue bonds
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        const bool touches_red =
            lat.color[lat.edge_a[e]] != 0 || lat.color[lat.edge_b[e]] != 0;
        if (touches_red)
            CHECK(lat.edge_kind[e] == static_cast<std::uint8_t>(EdgeKind::Blue));
        if (lat.edge_kind[e] == static_cast<std::uint8_t>(EdgeKind::Blue))
            CHECK(touches_red);
    }
}

TEST_CASE("modified (10,3)-b 4D: period four and the +z,+w,-z,-w cycle") {
    const UnitCell cell = parse_unit_cell(builtin_cell_text("b103-mod-4d"));
    CHECK(cell.dim == 4);
    CHECK(cell.nodes.size() == 384);   // 4^4 black + 128 red
    CHECK(cell.edges.size() == 512);
    const Lattice lat = build_named("b103-mod-4d", {2, 2, 2, 2});
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram.at(2) * 2 == rep.degree_histogram.at(3));

    // along each black line lattice the blue bond direction cycles through
    // +z, +w, -z, -w: walk the first x-chain of the cell
    std::map<std::vector<double>, int> node_at;
    for (const CellNode &n : cell.nodes) node_at[n.pos] = n.id;
    // black chain at y=z=w=0 cell row: x positions (i+0.5)/4
    std::vector<int> chain;
    for (int i = 0; i < 4; ++i)
        chain.push_back(node_at.at({(i + 0.5) / 4, 0.5 / 4, 0.5 / 4, 0.5 / 4}));
    // expected blue directions by cycle index (i + j + 2(z+w)) mod 4 with
    // j=z=w=0: +z, +w, -z, -w as i runs 0..3
    const int expect_axis[4] = {2, 3, 2, 3};
    const int expect_sign[4] = {+1, +1, -1, -1};
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (const CellEdge &e : cell.edges) {
            if (e.kind != EdgeKind::Blue) continue;
            if (e.a != chain[i] && e.b != chain[i]) continue;
            const int black = chain[i];
            const int red = (e.a == black) ? e.b : e.a;
            // red node's position reveals the bond axis and direction
            const auto &bp = cell.nodes[black].pos;
            const auto &rp = cell.nodes[red].pos;
            for (int d = 0; d < 4; ++d) {
                double delta = rp[d] - bp[d];
                if (delta > 0.5) delta -= 1.0;
                if (delta < -0.5) delta += 1.0;
                if (std::abs(delta) > 1e-9) {
                    CHECK(d == expect_axis[i]);
                    CHECK((delta > 0 ? +1 : -1) == expect_sign[i]);
                    found = true;
                }
            }
            if (found) break;
        }
        CHECK(found);
    }
}

TEST_CASE("the rule-generated cell reproduces the published 4D census") {
    const UnitCell gen = make_b103_mod_cell(4);
    const UnitCell fixed = parse_unit_cell(builtin_cell_text("b103-mod-4d"));
    CHECK(gen.nodes.size() == fixed.nodes.size());
    CHECK(gen.edges.size() == fixed.edges.size());
    const auto census = [](const UnitCell &c) {
        std::map<int, int> deg, col;
        for (const CellEdge &e : c.edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        std::map<int, int> hist;
        for (const CellNode &n : c.nodes) {
            ++hist[deg[n.id]];
            ++col[n.color];
        }
        return std::make_pair(hist, col);
    };
    CHECK(census(gen) == census(fixed));
}

TEST_CASE("higher-dimensional modified (10,3)-b cells validate by census") {
    for (const int d : {5, 6}) {
        const UnitCell cell = make_b103_mod_cell(d);
        std::vector<int> ext(static_cast<std::size_t>(d), 2);
        const Lattice lat = build_from_cell(cell, ext, "b103-mod", 3);
        const ValidationReport rep = validate(lat);
        CHECK(rep.ok);
        CHECK(rep.connected);
        CHECK(rep.degree_histogram.at(2) * 2 == rep.degree_histogram.at(3));
    }
}

TEST_CASE("brickwork census") {
    const Lattice lat = build_named("brickwork-mod-2d", {4, 12});
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram.at(2) * 2 == rep.degree_histogram.at(3));
    CHECK(rep.color_census.at(1) * 2 == rep.color_census.at(0));
}

TEST_CASE("diamond census") {
    const Lattice lat = build_named("diamond-3d", {4, 4, 4});
    const ValidationReport rep = validate(lat);
    CHECK(rep.ok);
    CHECK(rep.connected);
    CHECK(rep.degree_histogram == std::map<int, std::size_t>{{4, lat.num_nodes}});
    CHECK(rep.color_census == std::map<int, std::size_t>{{1, lat.num_nodes}});
}

TEST_CASE("color equals n minus degree on the microcluster lattices") {
    for (const char *name : {"two-layer-logical-square", "brickwork-mod-2d"}) {
        const Lattice lat = build_named(name, {4, 4});
        for (const auto &[deg, cnt] : degree_histogram(lat)) CHECK(deg <= 3);
        CHECK(validate(lat).ok);  // validate() enforces color = n - degree
    }
    for (const char *name : {"b103-standard-3d", "b103-mod-3d"}) {
        CHECK(validate(build_named(name, {3, 3, 3})).ok);
    }
}

TEST_CASE("bethe tree structure") {
    const int n = 3, g = 2, depth = 6;
    const Lattice lat = build_bethe_tree(n, g, depth);
    CHECK_FALSE(lat.periodic);
    // acyclic: edges = nodes - 1 and connected
    CHECK(lat.num_edges() == lat.num_nodes - 1);
    CHECK(validate(lat).connected);
    // generations: root color 1, then g black generations, then color 1
    // breadth-first distance from the root gives the generation
    std::vector<int> gen(lat.num_nodes, -1);
    gen[0] = 0;
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        // edges are emitted parent -> child in generation order
        gen[lat.edge_b[e]] = gen[lat.edge_a[e]] + 1;
    }
    for (std::size_t v = 0; v < lat.num_nodes; ++v) {
        const bool unmeasured = (gen[v] % (g + 1)) == 0;
        CHECK(lat.color[v] == (unmeasured ? 1 : 0));
    }
    CHECK_THROWS_AS(build_bethe_tree(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_bethe_tree(3, 0, 3), std::invalid_argument);
}

TEST_CASE("build_named errors") {
    CHECK_THROWS_AS(build_named("no-such-lattice", {4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(build_named("square-2d", {1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(build_named("square-2d", {4}), std::invalid_argument);
    CHECK_THROWS_AS(build_named("bethe-tree", {2, 2, 4}), std::invalid_argument);
}

TEST_CASE("cell parser round-trips and rejects garbage") {
    const std::string text = builtin_cell_text("two-layer-logical-square");
    const UnitCell cell = parse_unit_cell(text);
    CHECK(format_unit_cell(cell) == text);

    CHECK_THROWS_AS(parse_unit_cell(text + "stray tokens\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_unit_cell("dim 2; nodes 1; edges 0\n0 1 0.5 0.5 extra\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_unit_cell("dim 2; nodes 1; edges 1\n0 1 0.5 0.5\n"),
                    std::invalid_argument);  // truncated edge list
    CHECK_THROWS_AS(parse_unit_cell("dim 2; nodes 1; edges 1\n0 1 0.5 0.5\n0 3 0 0 green\n"),
                    std::invalid_argument);  // edge references missing node
    CHECK_THROWS_AS(parse_unit_cell("dim 2; nodes 1; edges 1\n0 1 0.5 0.5\n0 0 0 0 green\n"),
                    std::invalid_argument);  // zero-offset self loop
    CHECK_THROWS_AS(parse_unit_cell("dim 2; nodes 1; edges 1\n0 1 0.5 0.5\n0 0 1 0 purple\n"),
                    std::invalid_argument);  // unknown kind
    CHECK_THROWS_AS(parse_unit_cell("dim x; nodes 1; edges 0\n0 1 0.5 0.5\n"),
                    std::invalid_argument);
}

TEST_CASE("validate flags a hand-corrupted lattice") {
    Lattice lat = build_named("square-2d", {4, 4});
    lat.edge_b[3] = 999;  // dangling edge
    const ValidationReport rep = validate(lat);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());

    Lattice lat2 = build_named("square-2d", {4, 4});
    lat2.color[0] = 3;  // breaks color = n - degree
    CHECK_FALSE(validate(lat2).ok);
}

TEST_CASE("edge instantiation covers every cell with correct wrap offsets") {
    const Lattice lat = build_named("square-2d", {3, 5});
    CHECK(lat.num_edges() == 2 * 15);
    // each edge displacement is the unit-cell offset
    std::size_t plus_x = 0, plus_y = 0;
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        const auto *off = lat.edge_offset(e);
        if (off[0] == 1 && off[1] == 0) ++plus_x;
        if (off[0] == 0 && off[1] == 1) ++plus_y;
    }
    CHECK(plus_x == 15);
    CHECK(plus_y == 15);
}
