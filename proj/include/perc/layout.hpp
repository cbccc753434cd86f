#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perc/graphstate.hpp"

namespace perc::layout {

enum class Topology { Star, Clique, Line };

struct Microcluster {
    std::vector<int> photons;  // star topology is centered on the first photon
    Topology topo = Topology::Star;
};

struct FusionLayout {
    std::vector<Microcluster> microclusters;
    std::vector<std::pair<int, int>> fusion_pairs;
};

// Throws std::invalid_argument when a photon appears in two microclusters,
// a photon sits in more than one fusion pair, or a pair joins two photons of
// the same microcluster.
void validate_layout(const FusionLayout &layout);

// Microclusters as colored nodes, fusion attempts as bonds. May contain
// parallel bonds when two clusters share several fusion attempts.
struct LogicalGraph {
    int n = 0;
    std::vector<int> colors;                    // per microcluster
    std::vector<std::pair<int, int>> bonds;     // one per fusion pair
};

LogicalGraph logical_from_layout(const FusionLayout &layout, int n);

// Physical connectivity template: all photons stay as relay nodes,
// intra-microcluster edges are always on, and each fusion pair contributes a
// probabilistic bond between the two measured photons.
struct RelayGraph {
    std::vector<int> photons;
    std::vector<std::uint8_t> measured;           // aligned with photons
    std::vector<int> cluster_of;                  // aligned with photons
    std::vector<std::pair<int, int>> intra_edges;  // photon ids
    std::vector<std::pair<int, int>> fusion_edges; // photon ids, one per pair
};

RelayGraph relay_graph_from_layout(const FusionLayout &layout);

// Component labels under a fusion success/failure assignment (bit f of
// `outcomes` = pair f succeeded). Labels are canonical (smallest member id);
// relay labels are aligned with relay.photons, logical labels with
// microcluster indices. Bond f of the logical graph is fusion pair f.
std::vector<int> relay_component_labels(const RelayGraph &relay,
                                        std::uint64_t outcomes);
std::vector<int> logical_component_labels(const LogicalGraph &logical,
                                          std::uint64_t outcomes);

// The graph-state side of the same layout: build every microcluster as a
// graph state, apply successful fusions first, then failed ones.
graphstate::GraphState rewrite_layout(const FusionLayout &layout,
                                      std::uint64_t outcomes);

// Three 3-photon microclusters per site of an L x L periodic grid, chain
// fusions along x in the top layer and along y in the bottom layer, two
// central fusions per site.
FusionLayout make_two_layer_square_layout(int extent);

// Clique clusters arranged as a tree: an unmeasured-root construction with g
// measured generations between unmeasured ones.
FusionLayout make_bethe_layout(int n, int g, int depth);

}  // namespace perc::layout
