#pragma once

// Dense state-vector oracle for small graph states (<= ~10 qubits). Built
// before the rewrite engine and kept independent of it: raw amplitudes,
// explicit projections, and an exhaustive up-to-local-Clifford comparison.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

class StateVector {
  public:
    // qubits listed by external id; bit position = index in `ids` (ascending
    // order recommended so two states over the same ids are comparable)
    explicit StateVector(std::vector<int> ids) : ids_(std::move(ids)) {
        amp_.assign(std::size_t{1} << ids_.size(), cplx{0.0, 0.0});
        amp_[0] = 1.0;
    }

    static StateVector graph_state(const std::vector<int> &ids,
                                   const std::vector<std::pair<int, int>> &edges,
                                   const std::vector<int> &hadamard_tags = {}) {
        std::vector<int> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        StateVector sv(sorted);
        const double a = std::pow(2.0, -0.5 * static_cast<double>(sorted.size()));
        for (cplx &x : sv.amp_) x = a;
        for (const auto &[u, v] : edges) sv.apply_cz(u, v);
        for (const int t : hadamard_tags) sv.apply_h(t);
        return sv;
    }

    const std::vector<int> &ids() const { return ids_; }
    std::size_t qubits() const { return ids_.size(); }
    const std::vector<cplx> &amplitudes() const { return amp_; }

    int bit_of(int id) const {
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (ids_[i] == id) return static_cast<int>(i);
        throw std::invalid_argument("qubit id not in state");
    }

    void apply_h(int id) { apply_1q(id, {INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2}); }
    void apply_s(int id) { apply_1q(id, {1.0, 0.0, 0.0, cplx{0.0, 1.0}}); }
    void apply_sdg(int id) { apply_1q(id, {1.0, 0.0, 0.0, cplx{0.0, -1.0}}); }

    void apply_cz(int a, int b) {
        const std::uint64_t ma = 1ULL << bit_of(a);
        const std::uint64_t mb = 1ULL << bit_of(b);
        for (std::uint64_t i = 0; i < amp_.size(); ++i)
            if ((i & ma) && (i & mb)) amp_[i] = -amp_[i];
    }

    // Projects onto the +1 eigenspace of the Pauli X^x Z^z (phase +1);
    // returns the branch probability and renormalizes.
    double project_pauli_plus(std::uint64_t xmask, std::uint64_t zmask) {
        std::vector<cplx> out(amp_.size());
        for (std::uint64_t j = 0; j < amp_.size(); ++j) {
            const std::uint64_t src = j ^ xmask;
            const double sign =
                (__builtin_popcountll(zmask & src) & 1) ? -1.0 : 1.0;
            out[j] = 0.5 * (amp_[j] + sign * amp_[src]);
        }
        amp_ = std::move(out);
        return renormalize();
    }

    double project_pauli_plus_1q(int id, char basis) {
        const std::uint64_t m = 1ULL << bit_of(id);
        switch (basis) {
            case 'X': return project_pauli_plus(m, 0);
            case 'Z': return project_pauli_plus(0, m);
            case 'Y': {
                // (I + iXZ)/2
                std::vector<cplx> out(amp_.size());
                for (std::uint64_t j = 0; j < amp_.size(); ++j) {
                    const std::uint64_t src = j ^ m;
                    const double sign = (src & m) ? -1.0 : 1.0;
                    out[j] = 0.5 * (amp_[j] + cplx{0.0, 1.0} * sign * amp_[src]);
                }
                amp_ = std::move(out);
                return renormalize();
            }
        }
        throw std::invalid_argument("basis must be X, Y or Z");
    }

    // Removes a qubit that is (after rotations) in |0>; throws if it is not.
    void drop_zero_qubit(int id) {
        const int b = bit_of(id);
        const std::uint64_t m = 1ULL << b;
        double leak = 0.0;
        for (std::uint64_t i = 0; i < amp_.size(); ++i)
            if (i & m) leak += std::norm(amp_[i]);
        if (leak > 1e-9)
            throw std::runtime_error("qubit is not disentangled in |0>");
        std::vector<cplx> out(amp_.size() / 2);
        for (std::uint64_t i = 0; i < out.size(); ++i) {
            const std::uint64_t low = i & (m - 1);
            const std::uint64_t high = (i & ~(m - 1)) << 1;
            out[i] = amp_[high | low];
        }
        amp_ = std::move(out);
        ids_.erase(ids_.begin() + b);
    }

    double renormalize() {
        double n2 = 0.0;
        for (const cplx &x : amp_) n2 += std::norm(x);
        if (n2 > 1e-18) {
            const double inv = 1.0 / std::sqrt(n2);
            for (cplx &x : amp_) x *= inv;
        }
        return n2;
    }

  private:
    static constexpr double INV_SQRT2 = 0.70710678118654752440;

    struct Mat2 {
        cplx a, b, c, d;  // [[a,b],[c,d]]
    };

    void apply_1q(int id, Mat2 m) {
        const std::uint64_t mask = 1ULL << bit_of(id);
        for (std::uint64_t i = 0; i < amp_.size(); ++i) {
            if (i & mask) continue;
            const cplx x0 = amp_[i];
            const cplx x1 = amp_[i | mask];
            amp_[i] = m.a * x0 + m.b * x1;
            amp_[i | mask] = m.c * x0 + m.d * x1;
        }
    }

    std::vector<int> ids_;
    std::vector<cplx> amp_;
};

// --- equality up to a local Clifford (per-qubit Clifford x Pauli x phase) ---

namespace detail {

struct Mat2c {
    cplx m[4];
};

// coset representatives of C1 / Pauli group: I, H, S, HS, SH, HSH
inline const std::vector<Mat2c> &coset_reps() {
    static const double s = 0.70710678118654752440;
    static const cplx i{0.0, 1.0};
    static const std::vector<Mat2c> reps = {
        {{1, 0, 0, 1}},
        {{s, s, s, -s}},
        {{1, 0, 0, i}},
        {{s, s * i, s, -s * i}},       // H * S
        {{s, s, s * i, -s * i}},       // S * H
        {{0.5 + 0.5 * i, 0.5 - 0.5 * i, 0.5 - 0.5 * i, 0.5 + 0.5 * i}},  // HSH
    };
    return reps;
}

inline bool pauli_phase_equal(const std::vector<cplx> &v,
                              const std::vector<cplx> &w, int nbits) {
    const double tol = 1e-7;
    std::vector<std::uint64_t> sv, sw;
    for (std::uint64_t idx = 0; idx < v.size(); ++idx) {
        if (std::abs(v[idx]) > tol) sv.push_back(idx);
        if (std::abs(w[idx]) > tol) sw.push_back(idx);
    }
    if (sv.size() != sw.size() || sv.empty()) return sv.size() == sw.size();
    for (const std::uint64_t b : sw) {
        const std::uint64_t x = sv[0] ^ b;
        // support must be invariant under translation by x
        bool ok = true;
        for (const std::uint64_t j : sv) {
            if (std::abs(w[j ^ x]) <= tol) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // w[j^x] = e^{i t} (-1)^{z.j} v[j]: check ratios are +-(common phase)
        // and that the sign pattern is linear in j (Gaussian elimination)
        const cplx r0 = w[sv[0] ^ x] / v[sv[0]];
        if (std::abs(std::abs(r0) - 1.0) > tol) continue;
        std::vector<std::uint64_t> rows;
        std::vector<int> rhs;
        bool consistent = true;
        for (const std::uint64_t j : sv) {
            const cplx rj = w[j ^ x] / v[j] / r0;
            int bit;
            if (std::abs(rj - 1.0) < tol) bit = 0;
            else if (std::abs(rj + 1.0) < tol) bit = 1;
            else { consistent = false; break; }
            rows.push_back(j ^ sv[0]);
            rhs.push_back(bit);
        }
        if (!consistent) continue;
        // solve z . rows[k] = rhs[k] over GF(2), basis indexed by leading bit
        std::uint64_t basis[64] = {0};
        int basis_rhs[64] = {0};
        bool solvable = true;
        for (std::size_t k = 0; k < rows.size() && solvable; ++k) {
            std::uint64_t row = rows[k];
            int rb = rhs[k];
            while (row != 0) {
                const int top = 63 - __builtin_clzll(row);
                if (basis[top] == 0) {
                    basis[top] = row;
                    basis_rhs[top] = rb;
                    row = 0;
                    rb = 0;
                    break;
                }
                row ^= basis[top];
                rb ^= basis_rhs[top];
            }
            if (rb != 0) solvable = false;
        }
        (void)nbits;
        if (solvable) return true;
    }
    return false;
}

}  // namespace detail

// True when some per-qubit Clifford maps `a` onto `b` (up to a global
// phase). Exhaustive over the 6^n coset assignments with early exit.
inline bool local_clifford_equivalent(const StateVector &a,
                                      const StateVector &b) {
    if (a.ids() != b.ids()) return false;
    const int n = static_cast<int>(a.qubits());
    if (n == 0) return true;
    const auto &reps = detail::coset_reps();
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    const std::vector<cplx> &va = a.amplitudes();
    std::vector<cplx> buf(va.size());
    while (true) {
        buf = va;
        for (int qb = 0; qb < n; ++qb) {
            const detail::Mat2c &m = reps[static_cast<std::size_t>(
                assign[static_cast<std::size_t>(qb)])];
            const std::uint64_t mask = 1ULL << qb;
            for (std::uint64_t i = 0; i < buf.size(); ++i) {
                if (i & mask) continue;
                const cplx x0 = buf[i];
                const cplx x1 = buf[i | mask];
                buf[i] = m.m[0] * x0 + m.m[1] * x1;
                buf[i | mask] = m.m[2] * x0 + m.m[3] * x1;
            }
        }
        if (detail::pauli_phase_equal(buf, b.amplitudes(), n)) return true;
        int d = 0;
        while (d < n && ++assign[static_cast<std::size_t>(d)] == 6) {
            assign[static_cast<std::size_t>(d)] = 0;
            ++d;
        }
        if (d == n) return false;
    }
}

}  // namespace oracle
