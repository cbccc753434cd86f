#include "perc/graphstate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace perc::graphstate {

GraphState GraphState::from_edges(const std::vector<int> &vertices,
                                  const std::vector<std::pair<int, int>> &edges) {
    GraphState g;
    for (const int v : vertices) {
        if (!g.adj_.emplace(v, std::set<int>{}).second)
            throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    }
    for (const auto &[a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop rejected");
        g.check_vertex(a);
        g.check_vertex(b);
        if (g.has_edge(a, b))
            throw std::invalid_argument("duplicate edge " + std::to_string(a) +
                                        "-" + std::to_string(b));
        g.add_edge_unchecked(a, b);
    }
    return g;
}

void GraphState::check_vertex(int v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("no such vertex: " + std::to_string(v));
}

void GraphState::add_edge_unchecked(int a, int b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void GraphState::remove_vertex(int v) {
    for (const int u : adj_[v]) adj_[u].erase(v);
    adj_.erase(v);
    tags_.erase(v);
}

void GraphState::toggle_tag(int v) {
    if (!tags_.insert(v).second) tags_.erase(v);
}

std::size_t GraphState::edge_count() const {
    std::size_t twice = 0;
    for (const auto &[v, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
}

bool GraphState::has_edge(int a, int b) const {
    const auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
}

std::vector<int> GraphState::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto &[v, nbrs] : adj_) out.push_back(v);
    return out;
}

const std::set<int> &GraphState::neighbors(int v) const {
    check_vertex(v);
    return adj_.at(v);
}

GraphState GraphState::local_complement(int v) const {
    check_vertex(v);
    GraphState g = *this;
    const auto &nbrs = adj_.at(v);
    for (auto i = nbrs.begin(); i != nbrs.end(); ++i) {
        for (auto j = std::next(i); j != nbrs.end(); ++j) {
            if (g.has_edge(*i, *j)) {
                g.adj_[*i].erase(*j);
                g.adj_[*j].erase(*i);
            } else {
                g.add_edge_unchecked(*i, *j);
            }
        }
    }
    return g;
}

GraphState GraphState::measure_pauli(int v, Basis basis) const {
    check_vertex(v);
    Basis effective = basis;
    if (tagged(v)) {
        if (basis == Basis::Z) effective = Basis::X;
        else if (basis == Basis::X) effective = Basis::Z;
    }
    GraphState g = *this;
    g.tags_.erase(v);
    switch (effective) {
        case Basis::Z:
            g.remove_vertex(v);
            return g;
        case Basis::X: {
            const auto &nbrs = g.adj_.at(v);
            if (nbrs.empty()) {
                g.remove_vertex(v);
                return g;
            }
            const int pick = *nbrs.begin();  // lowest id
            g.remove_vertex(v);
            g.toggle_tag(pick);
            return g;
        }
        case Basis::Y: {
            g = g.local_complement(v);
            g.remove_vertex(v);
            return g;
        }
    }
    return g;
}

GraphState GraphState::fuse(int a, int b, FusionOutcome outcome) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("fusion needs two distinct photons");
    if (has_edge(a, b))
        throw std::invalid_argument(
            "fusion of adjacent photons is outside the modeled rules");
    if (tagged(a) || tagged(b))
        throw std::invalid_argument(
            "fusion of a Hadamard-tagged photon is outside the modeled rules");
    if (outcome == FusionOutcome::Failure)
        return measure_pauli(a, Basis::X).measure_pauli(b, Basis::Z);
    GraphState g = *this;
    const std::set<int> na = adj_.at(a);
    const std::set<int> nb = adj_.at(b);
    g.remove_vertex(a);
    g.remove_vertex(b);
    for (const int x : na) {
        if (x == b) continue;
        for (const int y : nb) {
            if (y == a || y == x) continue;
            if (!g.has_edge(x, y)) g.add_edge_unchecked(x, y);
        }
    }
    return g;
}

std::vector<std::vector<int>> GraphState::components() const {
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (const auto &[start, nbrs] : adj_) {
        if (seen.count(start)) continue;
        std::vector<int> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (const int w : adj_.at(u)) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool GraphState::same_component(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return true;
    std::set<int> seen{a};
    std::vector<int> stack{a};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const int w : adj_.at(u)) {
            if (w == b) return true;
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return false;
}

std::string GraphState::to_edge_list() const {
    std::ostringstream out;
    out << "vertices " << adj_.size() << "\n";
    bool first = true;
    for (const auto &[v, nbrs] : adj_) {
        out << (first ? "" : " ") << v;
        first = false;
    }
    out << "\n";
    out << "edges " << edge_count() << "\n";
    for (const auto &[v, nbrs] : adj_) {
        for (const int w : nbrs) {
            if (v < w) out << v << " " << w << "\n";
        }
    }
    return out.str();
}

GraphState GraphState::from_edge_list(const std::string &text) {
    std::istringstream in(text);
    std::string word;
    std::size_t count = 0;
    if (!(in >> word >> count) || word != "vertices")
        throw std::invalid_argument("bad edge-list header");
    std::vector<int> vertices(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!(in >> vertices[i]))
            throw std::invalid_argument("truncated vertex list");
    }
    std::size_t edges = 0;
    if (!(in >> word >> edges) || word != "edges")
        throw std::invalid_argument("bad edge-list edge header");
    std::vector<std::pair<int, int>> pairs(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        if (!(in >> pairs[i].first >> pairs[i].second))
            throw std::invalid_argument("truncated edge list");
    }
    if (in >> word) throw std::invalid_argument("trailing garbage in edge list");
    return from_edges(vertices, pairs);
}

}  // namespace perc::graphstate
