#pragma once

#include <cstdint>
#include <vector>

namespace perc {

// Union-find with path compression and union by size, extended with
// per-node displacement vectors (in unit-cell coordinates) relative to the
// component root. Adding an edge that closes a cycle with a nonzero net
// displacement means the cluster winds around the periodic lattice in every
// dimension where the displacement is nonzero.
class WindingUnionFind {
  public:
    WindingUnionFind() = default;

    void reset(std::size_t n, int dim, const std::uint8_t *node_colors) {
        n_ = n;
        dim_ = dim;
        parent_.resize(n);
        size_.assign(n, 1);
        colored_.resize(n);
        wrap_mask_.assign(n, 0);
        disp_.assign(n * dim, 0);
        for (std::size_t i = 0; i < n; ++i) {
            parent_[i] = static_cast<std::uint32_t>(i);
            colored_[i] = (node_colors != nullptr && node_colors[i] != 0) ? 1u : 0u;
        }
        merges_ = 0;
    }

    std::uint32_t find(std::uint32_t x) {
        std::uint32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        // Compress, accumulating displacements from the top of the path down
        // so every rewritten node ends up with its displacement to the root.
        path_.clear();
        for (std::uint32_t v = x; v != root; v = parent_[v]) path_.push_back(v);
        for (std::size_t k = path_.size(); k-- > 0;) {
            const std::uint32_t v = path_[k];
            const std::uint32_t p = parent_[v];
            if (p != root) {
                for (int d = 0; d < dim_; ++d)
                    disp_[v * dim_ + d] += disp_[p * dim_ + d];
            }
            parent_[v] = root;
        }
        return root;
    }

    // Adds edge a--b whose covering-space displacement (from a to b) is
    // `off`. Returns true if it merged two components. When the edge closes
    // a cycle, any nonzero winding marks the root's wrap mask; `wrapped_dims`
    // (if nonnull) receives the mask of dimensions newly wrapped.
    bool add_edge(std::uint32_t a, std::uint32_t b, const std::int8_t *off,
                  std::uint32_t *wrapped_dims = nullptr) {
        std::uint32_t ra = find(a);
        std::uint32_t rb = find(b);
        if (wrapped_dims != nullptr) *wrapped_dims = 0;
        if (ra == rb) {
            std::uint32_t mask = 0;
            for (int d = 0; d < dim_; ++d) {
                const std::int32_t w =
                    disp_[a * dim_ + d] + off[d] - disp_[b * dim_ + d];
                if (w != 0) mask |= (1u << d);
            }
            if (mask != 0) {
                wrap_mask_[ra] |= mask;
                if (wrapped_dims != nullptr) *wrapped_dims = mask;
            }
            return false;
        }
        // displacement of rb's root expressed relative to ra's root
        wbuf_.assign(dim_, 0);
        for (int d = 0; d < dim_; ++d)
            wbuf_[d] = disp_[a * dim_ + d] + off[d] - disp_[b * dim_ + d];
        if (size_[ra] < size_[rb]) {
            std::swap(ra, rb);
            for (int d = 0; d < dim_; ++d) wbuf_[d] = -wbuf_[d];
        }
        parent_[rb] = ra;
        for (int d = 0; d < dim_; ++d) disp_[rb * dim_ + d] = wbuf_[d];
        size_[ra] += size_[rb];
        colored_[ra] += colored_[rb];
        wrap_mask_[ra] |= wrap_mask_[rb];
        ++merges_;
        return true;
    }

    std::uint32_t component_size(std::uint32_t root) const { return size_[root]; }
    std::uint32_t component_colored(std::uint32_t root) const { return colored_[root]; }
    std::uint32_t component_wraps(std::uint32_t root) const { return wrap_mask_[root]; }
    std::size_t merge_count() const { return merges_; }
    std::size_t node_count() const { return n_; }

  private:
    std::size_t n_ = 0;
    int dim_ = 0;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> colored_;
    std::vector<std::uint8_t> wrap_mask_;
    std::vector<std::int32_t> disp_;
    std::vector<std::int32_t> wbuf_;
    std::vector<std::uint32_t> path_;
    std::size_t merges_ = 0;
};

}  // namespace perc
