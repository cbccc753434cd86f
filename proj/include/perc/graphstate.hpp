#pragma once

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace perc::graphstate {

enum class Basis { X, Y, Z };
enum class FusionOutcome { Success, Failure };

// A photonic graph state: simple undirected graph plus a pending-Hadamard
// tag per vertex. Measuring a tagged vertex in Z acts as X and vice versa
// (Y stays Y). Values are immutable; operations return rewritten copies.
class GraphState {
  public:
    GraphState() = default;
    static GraphState from_edges(const std::vector<int> &vertices,
                                 const std::vector<std::pair<int, int>> &edges);

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;
    bool has_edge(int a, int b) const;
    bool tagged(int v) const { return tags_.count(v) != 0; }
    std::vector<int> vertices() const;
    const std::set<int> &neighbors(int v) const;

    // Toggles every edge among the neighbors of v.
    GraphState local_complement(int v) const;

    // Pauli measurement of the modeled outcome branch. Z deletes the vertex
    // and its edges; X deletes it and moves a Hadamard onto its lowest-id
    // original neighbor; Y locally complements first. A pending tag on v is
    // resolved before the rule is applied.
    GraphState measure_pauli(int v, Basis basis) const;

    // Two-photon fusion of non-adjacent a, b from distinct clusters.
    // Success removes both and joins their old neighborhoods; failure is an
    // X measurement on a followed by a Z measurement on b.
    GraphState fuse(int a, int b, FusionOutcome outcome) const;

    // Connected components of the surviving vertices.
    std::vector<std::vector<int>> components() const;

    bool same_component(int a, int b) const;

    // Edge-list text fixture format: "vertices K", the K ids, "edges M",
    // then one "a b" pair per line.
    std::string to_edge_list() const;
    static GraphState from_edge_list(const std::string &text);

  private:
    void check_vertex(int v) const;
    void add_edge_unchecked(int a, int b);
    void remove_vertex(int v);
    void toggle_tag(int v);

    std::map<int, std::set<int>> adj_;
    std::set<int> tags_;
};

}  // namespace perc::graphstate
