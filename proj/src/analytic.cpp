#include "perc/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace perc::analytic {

double bethe_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("bethe_lower_bound requires n >= 2");
    return 1.0 / (n - 1);
}

double multinode_lower_bound(int n, int m) {
    if (n < 2 || m < 2)
        throw std::invalid_argument("multinode_lower_bound requires n, m >= 2");
    return 1.0 / (static_cast<double>(n - 1) * static_cast<double>(m - 1));
}

namespace {

// Bisection for a monotone increasing f with f(lo) < 0 < f(hi).
double bisect(const std::function<double(double)> &f, double lo, double hi,
              double precision) {
    while (hi - lo > precision) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void check_precision(double precision) {
    if (!(precision > 0.0) || precision > 1e-3)
        throw std::invalid_argument("precision must be in (0, 1e-3]");
}

}  // namespace

double inf_mod103b_threshold(double precision) {
    check_precision(precision);
    return bisect([](double x) { return x + 2.0 * x * x * x - 1.0; }, 0.0, 1.0,
                  precision);
}

BranchingSpec inf_mod103b_spec() {
    BranchingSpec spec;
    spec.size = 2;
    spec.description =
        "two classes: chain-entered and blue-entered measured nodes; "
        "E1 = l E1 + l + l^2 E2, E2 = 2 l E1";
    spec.matrix = [](double l) {
        return std::vector<double>{l, l * l, 2.0 * l, 0.0};
    };
    return spec;
}

BranchingSpec bethe_spec(int n) {
    if (n < 2) throw std::invalid_argument("bethe_spec requires n >= 2");
    BranchingSpec spec;
    spec.size = 1;
    spec.description = "degree-n Bethe lattice";
    spec.matrix = [n](double l) {
        return std::vector<double>{static_cast<double>(n - 1) * l};
    };
    return spec;
}

BranchingSpec periodic_tree_spec(int n, int g) {
    if (n < 3) throw std::invalid_argument("periodic_tree_spec requires n >= 3");
    if (g < 1) throw std::invalid_argument("periodic_tree_spec requires g >= 1");
    BranchingSpec spec;
    spec.size = g + 1;
    spec.description =
        "unmeasured class plus g measured generations, cyclic offspring";
    spec.matrix = [n, g](double l) {
        const int size = g + 1;
        std::vector<double> m(static_cast<std::size_t>(size) * size, 0.0);
        // class 0 (unmeasured) -> class 1; class i -> i+1; class g -> 0
        m[1] = static_cast<double>(n - 2) * l;
        for (int i = 1; i < g; ++i)
            m[i * size + (i + 1)] = static_cast<double>(n - 1) * l;
        m[g * size + 0] = static_cast<double>(n - 1) * l;
        return m;
    };
    return spec;
}

double spectral_radius(const std::vector<double> &m, int size, double rel_tol) {
    if (size < 1 || m.size() != static_cast<std::size_t>(size) * size)
        throw std::invalid_argument("matrix size mismatch");
    if (size == 1) return std::abs(m[0]);
    // shift by identity: same Perron vector, radius + 1, always aperiodic
    std::vector<double> v(static_cast<std::size_t>(size), 1.0);
    std::vector<double> w(static_cast<std::size_t>(size), 0.0);
    double prev = 0.0;
    for (int it = 0; it < 200000; ++it) {
        double norm = 0.0;
        for (int i = 0; i < size; ++i) {
            double acc = v[static_cast<std::size_t>(i)];
            for (int j = 0; j < size; ++j)
                acc += m[static_cast<std::size_t>(i) * size + j] *
                       v[static_cast<std::size_t>(j)];
            w[static_cast<std::size_t>(i)] = acc;
            norm = std::max(norm, acc);
        }
        if (norm == 0.0) return 0.0;
        for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / norm;
        if (it > 4 && std::abs(norm - prev) <= rel_tol * norm)
            return norm - 1.0;
        prev = norm;
    }
    return prev - 1.0;
}

double branching_threshold(const BranchingSpec &spec, double precision) {
    check_precision(precision);
    const auto rho = [&spec](double l) {
        return spectral_radius(spec.matrix(l), spec.size);
    };
    if (rho(0.0) >= 1.0)
        throw std::invalid_argument("branching spec already supercritical at 0");
    if (rho(1.0) < 1.0)
        throw std::invalid_argument("branching spec never turns supercritical");
    return bisect([&rho](double l) { return rho(l) - 1.0; }, 0.0, 1.0,
                  precision);
}

double periodic_tree_threshold(int n, int g) {
    if (n < 3)
        throw std::invalid_argument("periodic_tree_threshold requires n >= 3");
    if (g < 1)
        throw std::invalid_argument("periodic_tree_threshold requires g >= 1");
    const double gd = g;
    return std::pow(static_cast<double>(n - 2), -1.0 / (gd + 1.0)) *
           std::pow(static_cast<double>(n - 1), -gd / (gd + 1.0));
}

namespace {
void check_loss_model(const LossModel &model) {
    if (!(model.eta0 > 0.0) || model.eta0 > 1.0)
        throw std::invalid_argument("eta0 must be in (0, 1]");
    if (model.n < 2) throw std::invalid_argument("loss model requires n >= 2");
}
}  // namespace

Bound loss_lambda_lower_bound(const LossModel &model) {
    check_loss_model(model);
    Bound b;
    b.value = 1.0 / (static_cast<double>(model.n - 1) *
                     std::pow(model.eta0, 2.0 * model.n));
    b.attainable = b.value <= 1.0;
    return b;
}

Bound loss_eta_lower_bound(int n, double lambda) {
    if (n < 2) throw std::invalid_argument("loss_eta_lower_bound requires n >= 2");
    if (!(lambda > 0.0) || lambda > 1.0)
        throw std::invalid_argument("lambda must be in (0, 1]");
    Bound b;
    b.value = std::pow(1.0 / (lambda * static_cast<double>(n - 1)),
                       1.0 / (2.0 * n));
    b.attainable = b.value <= 1.0;
    return b;
}

OptimalN optimal_n_for_lambda(double lambda, int n_lo, int n_hi) {
    if (n_lo < 2 || n_hi < n_lo)
        throw std::invalid_argument("need 2 <= n_lo <= n_hi");
    OptimalN best;
    for (int n = n_lo; n <= n_hi; ++n) {
        const Bound b = loss_eta_lower_bound(n, lambda);
        if (!b.attainable) continue;
        if (best.n == 0 || b.value < best.bound) {
            best.n = n;
            best.bound = b.value;
        }
    }
    if (best.n == 0)
        throw std::invalid_argument(
            "no n in range admits percolation at this lambda");
    return best;
}

OptimalN optimal_n_for_eta(double eta0, int n_lo, int n_hi) {
    if (n_lo < 2 || n_hi < n_lo)
        throw std::invalid_argument("need 2 <= n_lo <= n_hi");
    OptimalN best;
    for (int n = n_lo; n <= n_hi; ++n) {
        const Bound b = loss_lambda_lower_bound({eta0, n});
        if (!b.attainable) continue;
        if (best.n == 0 || b.value < best.bound) {
            best.n = n;
            best.bound = b.value;
        }
    }
    if (best.n == 0)
        throw std::invalid_argument(
            "percolation is impossible for every n in range at this eta0");
    return best;
}

}  // namespace perc::analytic
