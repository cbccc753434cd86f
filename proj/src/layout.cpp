#include "perc/layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace perc::layout {

namespace {

std::map<int, int> photon_cluster_map(const FusionLayout &layout) {
    std::map<int, int> cluster_of;
    for (std::size_t c = 0; c < layout.microclusters.size(); ++c) {
        for (const int p : layout.microclusters[c].photons) {
            if (!cluster_of.emplace(p, static_cast<int>(c)).second)
                throw std::invalid_argument("photon " + std::to_string(p) +
                                            " appears in two microclusters");
        }
    }
    return cluster_of;
}

struct PlainUnionFind {
    std::vector<int> parent;
    explicit PlainUnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

void validate_layout(const FusionLayout &layout) {
    const auto cluster_of = photon_cluster_map(layout);
    for (const Microcluster &mc : layout.microclusters) {
        if (mc.photons.empty())
            throw std::invalid_argument("empty microcluster");
    }
    std::map<int, int> pair_uses;
    for (const auto &[a, b] : layout.fusion_pairs) {
        if (cluster_of.count(a) == 0 || cluster_of.count(b) == 0)
            throw std::invalid_argument("fusion pair references unknown photon");
        if (a == b)
            throw std::invalid_argument("fusion pair needs two distinct photons");
        if (++pair_uses[a] > 1 || ++pair_uses[b] > 1)
            throw std::invalid_argument(
                "photon " + std::to_string(pair_uses[a] > 1 ? a : b) +
                " is associated with more than one fusion attempt");
        if (cluster_of.at(a) == cluster_of.at(b))
            throw std::invalid_argument(
                "fusion pair joins two photons of the same microcluster");
    }
}

LogicalGraph logical_from_layout(const FusionLayout &layout, int n) {
    validate_layout(layout);
    if (n < 1) throw std::invalid_argument("microcluster size n must be >= 1");
    const auto cluster_of = photon_cluster_map(layout);
    for (const Microcluster &mc : layout.microclusters) {
        if (static_cast<int>(mc.photons.size()) > n)
            throw std::invalid_argument("microcluster larger than n");
    }
    LogicalGraph lg;
    lg.n = n;
    lg.colors.assign(layout.microclusters.size(), 0);
    for (std::size_t c = 0; c < layout.microclusters.size(); ++c)
        lg.colors[c] = static_cast<int>(layout.microclusters[c].photons.size());
    for (const auto &[a, b] : layout.fusion_pairs) {
        const int ca = cluster_of.at(a);
        const int cb = cluster_of.at(b);
        lg.bonds.emplace_back(ca, cb);
        --lg.colors[static_cast<std::size_t>(ca)];
        --lg.colors[static_cast<std::size_t>(cb)];
    }
    return lg;
}

RelayGraph relay_graph_from_layout(const FusionLayout &layout) {
    validate_layout(layout);
    RelayGraph relay;
    std::map<int, std::uint8_t> measured;
    for (std::size_t c = 0; c < layout.microclusters.size(); ++c) {
        const Microcluster &mc = layout.microclusters[c];
        for (const int p : mc.photons) {
            relay.photons.push_back(p);
            relay.cluster_of.push_back(static_cast<int>(c));
            measured[p] = 0;
        }
        switch (mc.topo) {
            case Topology::Star:
                for (std::size_t i = 1; i < mc.photons.size(); ++i)
                    relay.intra_edges.emplace_back(mc.photons[0], mc.photons[i]);
                break;
            case Topology::Line:
                for (std::size_t i = 1; i < mc.photons.size(); ++i)
                    relay.intra_edges.emplace_back(mc.photons[i - 1], mc.photons[i]);
                break;
            case Topology::Clique:
                for (std::size_t i = 0; i < mc.photons.size(); ++i)
                    for (std::size_t j = i + 1; j < mc.photons.size(); ++j)
                        relay.intra_edges.emplace_back(mc.photons[i], mc.photons[j]);
                break;
        }
    }
    for (const auto &[a, b] : layout.fusion_pairs) {
        relay.fusion_edges.emplace_back(a, b);
        measured[a] = 1;
        measured[b] = 1;
    }
    relay.measured.reserve(relay.photons.size());
    for (const int p : relay.photons) relay.measured.push_back(measured[p]);
    return relay;
}

std::vector<int> relay_component_labels(const RelayGraph &relay,
                                        std::uint64_t outcomes) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < relay.photons.size(); ++i)
        pos[relay.photons[i]] = static_cast<int>(i);
    PlainUnionFind uf(relay.photons.size());
    for (const auto &[a, b] : relay.intra_edges) uf.unite(pos.at(a), pos.at(b));
    for (std::size_t f = 0; f < relay.fusion_edges.size(); ++f) {
        if ((outcomes >> f) & 1ULL)
            uf.unite(pos.at(relay.fusion_edges[f].first),
                     pos.at(relay.fusion_edges[f].second));
    }
    std::vector<int> label(relay.photons.size());
    std::map<int, int> root_min;
    for (std::size_t i = 0; i < relay.photons.size(); ++i) {
        const int r = uf.find(static_cast<int>(i));
        const auto it = root_min.find(r);
        if (it == root_min.end() || relay.photons[i] < it->second)
            root_min[r] = relay.photons[i];
    }
    for (std::size_t i = 0; i < relay.photons.size(); ++i)
        label[i] = root_min.at(uf.find(static_cast<int>(i)));
    return label;
}

std::vector<int> logical_component_labels(const LogicalGraph &logical,
                                          std::uint64_t outcomes) {
    PlainUnionFind uf(logical.colors.size());
    for (std::size_t f = 0; f < logical.bonds.size(); ++f) {
        if ((outcomes >> f) & 1ULL)
            uf.unite(logical.bonds[f].first, logical.bonds[f].second);
    }
    std::vector<int> label(logical.colors.size());
    for (std::size_t i = 0; i < label.size(); ++i)
        label[i] = uf.find(static_cast<int>(i));
    return label;
}

graphstate::GraphState rewrite_layout(const FusionLayout &layout,
                                      std::uint64_t outcomes) {
    validate_layout(layout);
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    for (const Microcluster &mc : layout.microclusters) {
        for (const int p : mc.photons) vertices.push_back(p);
        switch (mc.topo) {
            case Topology::Star:
                for (std::size_t i = 1; i < mc.photons.size(); ++i)
                    edges.emplace_back(mc.photons[0], mc.photons[i]);
                break;
            case Topology::Line:
                for (std::size_t i = 1; i < mc.photons.size(); ++i)
                    edges.emplace_back(mc.photons[i - 1], mc.photons[i]);
                break;
            case Topology::Clique:
                for (std::size_t i = 0; i < mc.photons.size(); ++i)
                    for (std::size_t j = i + 1; j < mc.photons.size(); ++j)
                        edges.emplace_back(mc.photons[i], mc.photons[j]);
                break;
        }
    }
    graphstate::GraphState g = graphstate::GraphState::from_edges(vertices, edges);
    // successes first: the measurement order is immaterial physically, and
    // this keeps every fused photon untagged when its fusion is applied
    for (std::size_t f = 0; f < layout.fusion_pairs.size(); ++f) {
        if ((outcomes >> f) & 1ULL)
            g = g.fuse(layout.fusion_pairs[f].first, layout.fusion_pairs[f].second,
                       graphstate::FusionOutcome::Success);
    }
    for (std::size_t f = 0; f < layout.fusion_pairs.size(); ++f) {
        if (!((outcomes >> f) & 1ULL))
            g = g.fuse(layout.fusion_pairs[f].first, layout.fusion_pairs[f].second,
                       graphstate::FusionOutcome::Failure);
    }
    return g;
}

FusionLayout make_two_layer_square_layout(int extent) {
    if (extent < 2) throw std::invalid_argument("extent must be >= 2");
    const int l = extent;
    FusionLayout layout;
    const auto base = [l](int i, int j) { return 9 * (i * l + j); };
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            const int b = base(i, j);
            // top chain cluster, middle cluster (center unmeasured), bottom
            layout.microclusters.push_back({{b + 0, b + 1, b + 2}, Topology::Line});
            layout.microclusters.push_back({{b + 3, b + 4, b + 5}, Topology::Line});
            layout.microclusters.push_back({{b + 6, b + 7, b + 8}, Topology::Line});
        }
    }
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            const int b = base(i, j);
            // chain centers take the X role on failure, so a failed central
            // fusion leaves the chain itself connected
            layout.fusion_pairs.emplace_back(b + 1, b + 3);  // top center - middle end
            layout.fusion_pairs.emplace_back(b + 7, b + 5);  // bottom center - middle end
            layout.fusion_pairs.emplace_back(b + 2, base((i + 1) % l, j) + 0);
            layout.fusion_pairs.emplace_back(b + 8, base(i, (j + 1) % l) + 6);
        }
    }
    return layout;
}

FusionLayout make_bethe_layout(int n, int g, int depth) {
    if (n < 3) throw std::invalid_argument("bethe layout requires n >= 3");
    if (g < 1) throw std::invalid_argument("bethe layout requires g >= 1");
    if (depth < 1) throw std::invalid_argument("bethe layout requires depth >= 1");
    FusionLayout layout;
    int next_photon = 0;
    const auto add_cluster = [&]() {
        Microcluster mc;
        mc.topo = Topology::Clique;
        for (int k = 0; k < n; ++k) mc.photons.push_back(next_photon++);
        layout.microclusters.push_back(mc);
        return static_cast<int>(layout.microclusters.size()) - 1;
    };
    struct Slot {
        int cluster;
        int used;  // photons already committed to fusions
    };
    std::vector<Slot> frontier{{add_cluster(), 0}};
    for (int gen = 1; gen <= depth; ++gen) {
        std::vector<Slot> next;
        for (Slot &slot : frontier) {
            const bool parent_unmeasured = ((gen - 1) % (g + 1)) == 0;
            int children = parent_unmeasured ? n - 2 : n - 1;
            if (slot.cluster == 0) children = n - 1;
            for (int ch = 0; ch < children; ++ch) {
                const int child = add_cluster();
                const int pp =
                    layout.microclusters[static_cast<std::size_t>(slot.cluster)]
                        .photons[static_cast<std::size_t>(slot.used++)];
                const int cp =
                    layout.microclusters[static_cast<std::size_t>(child)].photons[0];
                layout.fusion_pairs.emplace_back(pp, cp);
                next.push_back({child, 1});
            }
        }
        frontier = std::move(next);
    }
    return layout;
}

}  // namespace perc::layout
