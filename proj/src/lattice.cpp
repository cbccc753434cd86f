#include "perc/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace perc::lattice {

const char *kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Green: return "green";
        case EdgeKind::Blue: return "blue";
        case EdgeKind::Generic: return "generic";
    }
    return "generic";
}

EdgeKind kind_from_name(const std::string &name) {
    if (name == "green") return EdgeKind::Green;
    if (name == "blue") return EdgeKind::Blue;
    if (name == "generic") return EdgeKind::Generic;
    throw std::invalid_argument("unknown edge kind: " + name);
}

void UnitCell::validate() const {
    if (dim < 1) throw std::invalid_argument("unit cell dimension must be >= 1");
    if (nodes.empty()) throw std::invalid_argument("unit cell has no nodes");
    const int k = static_cast<int>(nodes.size());
    for (int i = 0; i < k; ++i) {
        if (nodes[i].id != i)
            throw std::invalid_argument("unit cell node ids must be 0..K-1 in order");
        if (nodes[i].color < 0)
            throw std::invalid_argument("unit cell node color must be nonnegative");
        if (static_cast<int>(nodes[i].pos.size()) != dim)
            throw std::invalid_argument("unit cell node position has wrong dimension");
    }
    for (const CellEdge &e : edges) {
        if (e.a < 0 || e.a >= k || e.b < 0 || e.b >= k)
            throw std::invalid_argument("unit cell edge references missing node");
        if (static_cast<int>(e.offset.size()) != dim)
            throw std::invalid_argument("unit cell edge offset has wrong dimension");
        bool zero = true;
        for (const int o : e.offset) zero = zero && (o == 0);
        if (e.a == e.b && zero)
            throw std::invalid_argument("unit cell has a zero-offset self-loop");
        for (const int o : e.offset) {
            if (o < -120 || o > 120)
                throw std::invalid_argument("unit cell edge offset out of range");
        }
    }
}

namespace {

// Strict line-oriented tokenizer: every line must be fully consumed.
std::vector<std::string> split_ws(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long parse_long(const std::string &tok, const char *what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
    }
    if (used != tok.size())
        throw std::invalid_argument(std::string("trailing garbage in ") + what + ": " + tok);
    return v;
}

double parse_double(const std::string &tok, const char *what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
    }
    if (used != tok.size())
        throw std::invalid_argument(std::string("trailing garbage in ") + what + ": " + tok);
    return v;
}

}  // namespace

UnitCell parse_unit_cell(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty unit cell text");
    auto head = split_ws(line);
    if (head.size() != 6 || head[0] != "dim" || head[1].back() != ';' ||
        head[2] != "nodes" || head[3].back() != ';' || head[4] != "edges")
        throw std::invalid_argument("bad unit cell header: " + line);
    UnitCell cell;
    cell.dim = static_cast<int>(parse_long(head[1].substr(0, head[1].size() - 1), "dim"));
    const long k = parse_long(head[3].substr(0, head[3].size() - 1), "node count");
    const long m = parse_long(head[5], "edge count");
    if (cell.dim < 1 || k < 1 || m < 0)
        throw std::invalid_argument("bad unit cell header values");

    for (long i = 0; i < k; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("unit cell truncated in node list");
        auto t = split_ws(line);
        if (t.size() != 2 + static_cast<std::size_t>(cell.dim))
            throw std::invalid_argument("bad node line: " + line);
        CellNode node;
        node.id = static_cast<int>(parse_long(t[0], "node id"));
        node.color = static_cast<int>(parse_long(t[1], "node color"));
        for (int d = 0; d < cell.dim; ++d)
            node.pos.push_back(parse_double(t[2 + d], "node position"));
        cell.nodes.push_back(std::move(node));
    }
    for (long e = 0; e < m; ++e) {
        if (!std::getline(in, line))
            throw std::invalid_argument("unit cell truncated in edge list");
        auto t = split_ws(line);
        if (t.size() != 3 + static_cast<std::size_t>(cell.dim))
            throw std::invalid_argument("bad edge line: " + line);
        CellEdge edge;
        edge.a = static_cast<int>(parse_long(t[0], "edge endpoint"));
        edge.b = static_cast<int>(parse_long(t[1], "edge endpoint"));
        for (int d = 0; d < cell.dim; ++d)
            edge.offset.push_back(static_cast<int>(parse_long(t[2 + d], "edge offset")));
        edge.kind = kind_from_name(t[2 + cell.dim]);
        cell.edges.push_back(std::move(edge));
    }
    while (std::getline(in, line)) {
        if (!split_ws(line).empty())
            throw std::invalid_argument("trailing garbage after edge list: " + line);
    }
    cell.validate();
    return cell;
}

std::string format_unit_cell(const UnitCell &cell) {
    std::ostringstream out;
    out << "dim " << cell.dim << "; nodes " << cell.nodes.size() << "; edges "
        << cell.edges.size() << "\n";
    char buf[64];
    for (const CellNode &n : cell.nodes) {
        out << n.id << " " << n.color;
        for (const double x : n.pos) {
            std::snprintf(buf, sizeof(buf), " %.6g", x);
            out << buf;
        }
        out << "\n";
    }
    for (const CellEdge &e : cell.edges) {
        out << e.a << " " << e.b;
        for (const int o : e.offset) out << " " << o;
        out << " " << kind_name(e.kind) << "\n";
    }
    return out.str();
}

UnitCell load_unit_cell_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cell file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_unit_cell(ss.str());
}

std::size_t Lattice::colored_count() const {
    std::size_t c = 0;
    for (const std::uint8_t x : color) c += (x != 0) ? 1 : 0;
    return c;
}

Lattice build_from_cell(const UnitCell &cell, const std::vector<int> &extents,
                        const std::string &name, int microcluster_n) {
    cell.validate();
    if (static_cast<int>(extents.size()) != cell.dim)
        throw std::invalid_argument("extents dimension does not match unit cell");
    std::size_t ncells = 1;
    for (const int l : extents) {
        if (l < 2) throw std::invalid_argument("extents must be >= 2 in every dimension");
        ncells *= static_cast<std::size_t>(l);
    }
    const std::size_t k = cell.nodes.size();
    const std::size_t m = cell.edges.size();
    const int dim = cell.dim;
    if (ncells * k > 0xffffffffULL)
        throw std::invalid_argument("lattice too large for 32-bit node indices");

    Lattice lat;
    lat.name = name;
    lat.cell = cell;
    lat.extents = extents;
    lat.microcluster_n = microcluster_n;
    lat.num_nodes = ncells * k;
    lat.color.resize(lat.num_nodes);
    lat.edge_a.resize(ncells * m);
    lat.edge_b.resize(ncells * m);
    lat.edge_kind.resize(ncells * m);
    lat.edge_off.resize(ncells * m * static_cast<std::size_t>(dim));

    std::vector<int> coord(dim, 0);
    for (std::size_t c = 0; c < ncells; ++c) {
        const std::size_t base = c * k;
        for (std::size_t i = 0; i < k; ++i)
            lat.color[base + i] = static_cast<std::uint8_t>(cell.nodes[i].color);
        for (std::size_t e = 0; e < m; ++e) {
            const CellEdge &ce = cell.edges[e];
            std::size_t target = 0;
            for (int d = 0; d < dim; ++d) {
                int t = coord[d] + ce.offset[d];
                const int l = extents[d];
                t %= l;
                if (t < 0) t += l;
                target = target * static_cast<std::size_t>(l) + static_cast<std::size_t>(t);
            }
            const std::size_t eid = c * m + e;
            lat.edge_a[eid] = static_cast<std::uint32_t>(base + static_cast<std::size_t>(ce.a));
            lat.edge_b[eid] = static_cast<std::uint32_t>(target * k + static_cast<std::size_t>(ce.b));
            lat.edge_kind[eid] = static_cast<std::uint8_t>(ce.kind);
            for (int d = 0; d < dim; ++d)
                lat.edge_off[eid * static_cast<std::size_t>(dim) + static_cast<std::size_t>(d)] =
                    static_cast<std::int8_t>(ce.offset[d]);
        }
        // advance row-major coordinate (last dimension fastest)
        for (int d = dim - 1; d >= 0; --d) {
            if (++coord[d] < extents[d]) break;
            coord[d] = 0;
        }
    }
    return lat;
}

UnitCell make_b103_mod_cell(int dims) {
    if (dims < 3 || dims > 6)
        throw std::invalid_argument("modified (10,3)-b cells support 3 <= dims <= 6");
    const int m = dims - 2;
    const int period = 2 * m;
    std::vector<int> ext(static_cast<std::size_t>(dims), 2);
    // the 4D cell is published with period four in every dimension; keep that
    // convention for the x/y chain directions in all dims
    ext[0] = (dims == 3) ? 2 : period;
    ext[1] = (dims == 3) ? 2 : period;
    if (dims == 4) { ext[2] = 4; ext[3] = 4; }

    std::size_t ncells = 1;
    for (const int l : ext) ncells *= static_cast<std::size_t>(l);

    UnitCell cell;
    cell.dim = dims;
    auto linear = [&](const std::vector<int> &c) {
        std::size_t x = 0;
        for (int d = 0; d < dims; ++d)
            x = x * static_cast<std::size_t>(ext[d]) + static_cast<std::size_t>(c[d]);
        return x;
    };
    std::vector<int> c(static_cast<std::size_t>(dims), 0);
    for (std::size_t i = 0; i < ncells; ++i) {
        CellNode node;
        node.id = static_cast<int>(i);
        node.color = 0;
        for (int d = 0; d < dims; ++d)
            node.pos.push_back((c[d] + 0.5) / ext[d]);
        cell.nodes.push_back(std::move(node));
        for (int d = dims - 1; d >= 0; --d) {
            if (++c[d] < ext[d]) break;
            c[d] = 0;
        }
    }

    auto wrap_target = [&](std::vector<int> t) {
        std::vector<int> off(static_cast<std::size_t>(dims), 0);
        for (int d = 0; d < dims; ++d) {
            while (t[d] >= ext[d]) { t[d] -= ext[d]; ++off[d]; }
            while (t[d] < 0) { t[d] += ext[d]; --off[d]; }
        }
        return std::make_pair(linear(t), off);
    };

    std::fill(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < ncells; ++i) {
        int zsum = 0;
        for (int d = 2; d < dims; ++d) zsum += c[d];
        // chain bond in the (x,y) plane
        std::vector<int> t = c;
        if (zsum % 2 == 0) ++t[0]; else ++t[1];
        auto [tgt, off] = wrap_target(t);
        CellEdge green;
        green.a = static_cast<int>(i);
        green.b = static_cast<int>(tgt);
        green.offset = off;
        green.kind = EdgeKind::Green;
        cell.edges.push_back(std::move(green));
        // blue bond, emitted from the + side of the cycle only
        const int idx = (c[0] + c[1] + m * zsum) % period;
        if (idx < m) {
            const int axis = 2 + idx;
            t = c; ++t[axis];
            auto [vt, voff] = wrap_target(t);
            CellNode red;
            red.id = static_cast<int>(cell.nodes.size());
            red.color = 1;
            for (int d = 0; d < dims; ++d) {
                double x = (c[d] + 0.5) / ext[d];
                if (d == axis) x += 0.5 / ext[d];
                if (x >= 1.0) x -= 1.0;
                red.pos.push_back(x);
            }
            CellEdge half1;
            half1.a = static_cast<int>(i);
            half1.b = red.id;
            half1.offset.assign(static_cast<std::size_t>(dims), 0);
            half1.kind = EdgeKind::Blue;
            CellEdge half2;
            half2.a = red.id;
            half2.b = static_cast<int>(vt);
            half2.offset = voff;
            half2.kind = EdgeKind::Blue;
            cell.nodes.push_back(std::move(red));
            cell.edges.push_back(std::move(half1));
            cell.edges.push_back(std::move(half2));
        }
        for (int d = dims - 1; d >= 0; --d) {
            if (++c[d] < ext[d]) break;
            c[d] = 0;
        }
    }
    cell.validate();
    return cell;
}

Lattice build_bethe_tree(int n, int g, int depth) {
    if (n < 3) throw std::invalid_argument("bethe-tree requires n >= 3");
    if (g < 1) throw std::invalid_argument("bethe-tree requires g >= 1");
    if (depth < 1) throw std::invalid_argument("bethe-tree requires depth >= 1");
    Lattice lat;
    lat.name = "bethe-tree";
    lat.cell.dim = 1;
    lat.extents = {depth};
    lat.periodic = false;
    lat.microcluster_n = n;

    // generation 0 is the unmeasured root (n-1 children); a node in an
    // unmeasured generation has n-2 children, a measured one has n-1
    std::vector<std::uint32_t> frontier = {0};
    lat.color.push_back(1);
    for (int gen = 1; gen <= depth; ++gen) {
        const bool unmeasured = (gen % (g + 1)) == 0;
        std::vector<std::uint32_t> next;
        for (const std::uint32_t parent : frontier) {
            const bool parent_unmeasured = lat.color[parent] != 0;
            int children = parent_unmeasured ? (n - 2) : (n - 1);
            if (parent == 0) children = n - 1;
            for (int ch = 0; ch < children; ++ch) {
                const auto id = static_cast<std::uint32_t>(lat.color.size());
                lat.color.push_back(unmeasured ? 1 : 0);
                lat.edge_a.push_back(parent);
                lat.edge_b.push_back(id);
                lat.edge_kind.push_back(static_cast<std::uint8_t>(EdgeKind::Generic));
                lat.edge_off.push_back(0);
                next.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    lat.num_nodes = lat.color.size();
    return lat;
}

namespace {

struct NamedSpec {
    const char *name;
    int microcluster_n;
    int dims;
};

constexpr NamedSpec kNamed[] = {
    {"square-2d", 5, 2},
    {"diamond-3d", 5, 3},
    {"two-layer-logical-square", 3, 2},
    {"brickwork-mod-2d", 3, 2},
    {"b103-standard-3d", 3, 3},
    {"b103-mod-3d", 3, 3},
    {"b103-mod-4d", 3, 4},
};

}  // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const NamedSpec &s : kNamed) out.emplace_back(s.name);
    out.emplace_back("b103-mod-5d");
    out.emplace_back("b103-mod-6d");
    out.emplace_back("bethe-tree");
    return out;
}

Lattice build_named(const std::string &name, const std::vector<int> &extents) {
    if (name == "bethe-tree") {
        if (extents.size() != 3)
            throw std::invalid_argument("bethe-tree takes extents n,g,depth");
        return build_bethe_tree(extents[0], extents[1], extents[2]);
    }
    if (name == "b103-mod-5d" || name == "b103-mod-6d") {
        const int dims = (name == "b103-mod-5d") ? 5 : 6;
        return build_from_cell(make_b103_mod_cell(dims), extents, name, 3);
    }
    for (const NamedSpec &s : kNamed) {
        if (name == s.name)
            return build_from_cell(parse_unit_cell(builtin_cell_text(name)),
                                   extents, name, s.microcluster_n);
    }
    throw std::invalid_argument("unknown lattice name: " + name);
}

ValidationReport validate(const Lattice &lat) {
    ValidationReport rep;
    rep.num_nodes = lat.num_nodes;
    rep.num_edges = lat.num_edges();

    std::vector<std::uint32_t> degree(lat.num_nodes, 0);
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        if (lat.edge_a[e] >= lat.num_nodes || lat.edge_b[e] >= lat.num_nodes) {
            rep.violations.push_back("edge " + std::to_string(e) + " references missing node");
            continue;
        }
        ++degree[lat.edge_a[e]];
        ++degree[lat.edge_b[e]];
        ++rep.kind_census[kind_name(static_cast<EdgeKind>(lat.edge_kind[e]))];
    }
    for (std::size_t v = 0; v < lat.num_nodes; ++v) {
        ++rep.degree_histogram[static_cast<int>(degree[v])];
        ++rep.color_census[static_cast<int>(lat.color[v])];
    }

    if (lat.periodic) {
        std::size_t ncells = 1;
        for (const int l : lat.extents) ncells *= static_cast<std::size_t>(l);
        if (lat.num_nodes != ncells * lat.cell.nodes.size())
            rep.violations.push_back("node count does not match extents x unit cell");
        if (lat.num_edges() != ncells * lat.cell.edges.size())
            rep.violations.push_back("edge count does not match extents x unit cell");
        // every node's degree must equal its unit-cell degree
        std::vector<std::uint32_t> cell_degree(lat.cell.nodes.size(), 0);
        for (const CellEdge &e : lat.cell.edges) {
            ++cell_degree[static_cast<std::size_t>(e.a)];
            ++cell_degree[static_cast<std::size_t>(e.b)];
        }
        for (std::size_t v = 0; v < lat.num_nodes; ++v) {
            if (degree[v] != cell_degree[v % lat.cell.nodes.size()]) {
                rep.violations.push_back("node " + std::to_string(v) +
                                         " degree differs from its unit-cell degree");
                break;
            }
        }
    }
    if (lat.microcluster_n > 0 && lat.periodic) {
        for (std::size_t v = 0; v < lat.num_nodes; ++v) {
            if (static_cast<int>(lat.color[v]) + static_cast<int>(degree[v]) !=
                lat.microcluster_n) {
                rep.violations.push_back(
                    "node " + std::to_string(v) + " violates color = n - degree");
                break;
            }
        }
    }

    // connectivity of the fully occupied lattice
    if (lat.num_nodes > 0) {
        std::vector<std::vector<std::uint32_t>> adj(lat.num_nodes);
        for (std::size_t e = 0; e < lat.num_edges(); ++e) {
            if (lat.edge_a[e] >= lat.num_nodes || lat.edge_b[e] >= lat.num_nodes) continue;
            adj[lat.edge_a[e]].push_back(lat.edge_b[e]);
            adj[lat.edge_b[e]].push_back(lat.edge_a[e]);
        }
        std::vector<std::uint8_t> seen(lat.num_nodes, 0);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            const std::uint32_t u = q.front();
            q.pop();
            for (const std::uint32_t v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    q.push(v);
                }
            }
        }
        rep.connected = (reached == lat.num_nodes);
    }
    rep.ok = rep.violations.empty();
    return rep;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    out << "nodes " << num_nodes << ", edges " << num_edges
        << (connected ? ", connected" : ", NOT connected") << "\n";
    out << "degree histogram:";
    for (const auto &[d, c] : degree_histogram) out << " " << d << ":" << c;
    out << "\ncolor census:";
    for (const auto &[col, c] : color_census) out << " " << col << ":" << c;
    out << "\nedge kinds:";
    for (const auto &[kind, c] : kind_census) out << " " << kind << ":" << c;
    out << "\n";
    if (ok) {
        out << "all invariants hold\n";
    } else {
        for (const std::string &v : violations) out << "VIOLATION: " << v << "\n";
    }
    return out.str();
}

}  // namespace perc::lattice
