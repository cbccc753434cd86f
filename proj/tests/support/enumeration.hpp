#pragma once

// Brute-force percolation oracles for tiny graphs: exact expectations by
// enumeration over all bond (and site) subsets. Independent of the
// Newman-Ziff / convolution implementation on purpose.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

struct TinyGraph {
    std::size_t nodes = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint8_t> colored;  // optional, per node
};

struct TinyStats {
    std::uint32_t largest = 0;
    std::uint32_t colored_in_largest = 0;
};

inline TinyStats tiny_stats(const TinyGraph &g, std::uint64_t bond_mask,
                            std::uint64_t site_mask_all_on = ~0ULL) {
    std::vector<std::uint32_t> parent(g.nodes);
    for (std::size_t i = 0; i < g.nodes; ++i)
        parent[i] = static_cast<std::uint32_t>(i);
    const auto find = [&parent](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const auto site_on = [&](std::uint32_t v) {
        return ((site_mask_all_on >> v) & 1ULL) != 0;
    };
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!((bond_mask >> e) & 1ULL)) continue;
        if (!site_on(g.edges[e].first) || !site_on(g.edges[e].second)) continue;
        const auto ra = find(g.edges[e].first);
        const auto rb = find(g.edges[e].second);
        if (ra != rb) parent[ra < rb ? rb : ra] = ra < rb ? ra : rb;
    }
    std::vector<std::uint32_t> size(g.nodes, 0), colored(g.nodes, 0);
    for (std::uint32_t v = 0; v < g.nodes; ++v) {
        if (!site_on(v)) continue;
        const auto r = find(v);
        ++size[r];
        if (!g.colored.empty() && g.colored[v]) ++colored[r];
    }
    TinyStats st;
    for (std::uint32_t v = 0; v < g.nodes; ++v) {
        if (size[v] > st.largest) {
            st.largest = size[v];
            st.colored_in_largest = colored[v];
        }
    }
    return st;
}

// E[largest fraction] at bond probability p (all sites on).
inline double exact_largest_fraction(const TinyGraph &g, double p) {
    const std::size_t m = g.edges.size();
    double acc = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        double w = 1.0;
        for (std::size_t e = 0; e < m; ++e)
            w *= ((mask >> e) & 1ULL) ? p : (1.0 - p);
        acc += w * tiny_stats(g, mask).largest;
    }
    return acc / static_cast<double>(g.nodes);
}

// E[largest | exactly k bonds occupied]: uniform over k-subsets.
inline double exact_largest_fraction_at_count(const TinyGraph &g, unsigned k) {
    const std::size_t m = g.edges.size();
    double acc = 0.0, count = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
        acc += tiny_stats(g, mask).largest;
        count += 1.0;
    }
    return acc / (count * static_cast<double>(g.nodes));
}

// Site-bond version of the exact canonical expectation.
inline double exact_site_bond_largest_fraction(const TinyGraph &g, double p,
                                               double q) {
    const std::size_t m = g.edges.size();
    const std::size_t n = g.nodes;
    double acc = 0.0;
    for (std::uint64_t smask = 0; smask < (1ULL << n); ++smask) {
        double sw = 1.0;
        for (std::size_t v = 0; v < n; ++v)
            sw *= ((smask >> v) & 1ULL) ? q : (1.0 - q);
        for (std::uint64_t bmask = 0; bmask < (1ULL << m); ++bmask) {
            double bw = sw;
            for (std::size_t e = 0; e < m; ++e)
                bw *= ((bmask >> e) & 1ULL) ? p : (1.0 - p);
            acc += bw * tiny_stats(g, bmask, smask).largest;
        }
    }
    return acc / static_cast<double>(n);
}

}  // namespace oracle
