#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace perc::lattice {

enum class EdgeKind : std::uint8_t { Green = 0, Blue = 1, Generic = 2 };

const char *kind_name(EdgeKind kind);
EdgeKind kind_from_name(const std::string &name);

struct CellNode {
    int id = 0;
    int color = 0;
    std::vector<double> pos;
};

struct CellEdge {
    int a = 0;
    int b = 0;
    std::vector<int> offset;
    EdgeKind kind = EdgeKind::Generic;
};

// Periodic unit cell. The plain-text form is
//   dim D; nodes K; edges M
//   id color x1..xD            (K lines)
//   a b o1..oD kind            (M lines)
struct UnitCell {
    int dim = 0;
    std::vector<CellNode> nodes;
    std::vector<CellEdge> edges;

    void validate() const;  // throws std::invalid_argument on malformed cells
};

UnitCell parse_unit_cell(const std::string &text);
std::string format_unit_cell(const UnitCell &cell);
UnitCell load_unit_cell_file(const std::string &path);

// Finite instantiation of a unit cell with periodic closure in every
// dimension. Node index = cell_linear * K + unit_node, cells enumerated
// row-major with the first dimension slowest. Edge index = cell_linear * M +
// cell_edge, in the same order. Immutable after construction.
struct Lattice {
    std::string name;
    UnitCell cell;
    std::vector<int> extents;
    bool periodic = true;
    int microcluster_n = 0;  // photons per microcluster; 0 when not applicable

    std::size_t num_nodes = 0;
    std::vector<std::uint8_t> color;
    std::vector<std::uint32_t> edge_a;
    std::vector<std::uint32_t> edge_b;
    std::vector<std::uint8_t> edge_kind;
    std::vector<std::int8_t> edge_off;  // num_edges() * dim, covering-space displacement

    int dim() const { return cell.dim; }
    std::size_t num_edges() const { return edge_a.size(); }
    const std::int8_t *edge_offset(std::size_t e) const {
        return edge_off.data() + e * static_cast<std::size_t>(cell.dim);
    }
    std::size_t colored_count() const;
};

Lattice build_from_cell(const UnitCell &cell, const std::vector<int> &extents,
                        const std::string &name, int microcluster_n);

// name is one of: square-2d, diamond-3d, two-layer-logical-square,
// brickwork-mod-2d, b103-standard-3d, b103-mod-3d, b103-mod-4d (and the
// rule-generated b103-mod-5d/6d), or bethe-tree. bethe-tree interprets
// extents as {n, g, depth} and is the only non-periodic construction.
Lattice build_named(const std::string &name, const std::vector<int> &extents);

std::vector<std::string> builtin_names();
std::string builtin_cell_text(const std::string &name);

// Modified (10,3)-b family generalized to dims >= 3: line lattices in the
// (x,y) plane, blue bonds cycling through +z1..+zm,-z1..-zm (m = dims-2)
// along each line, one degree-2 node at the center of each blue bond.
UnitCell make_b103_mod_cell(int dims);

// Tree of n-photon cliques: an unmeasured (color-1) generation every g+1
// levels, g generations of fully-measured degree-n nodes in between.
Lattice build_bethe_tree(int n, int g, int depth);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::map<int, std::size_t> degree_histogram;
    std::map<int, std::size_t> color_census;
    std::map<std::string, std::size_t> kind_census;
    bool connected = false;
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;

    std::string summary() const;
};

ValidationReport validate(const Lattice &lat);

}  // namespace perc::lattice
