#pragma once

#include <functional>
#include <string>
#include <vector>

namespace perc::analytic {

// Fusion success probabilities attainable with linear optics.
constexpr double kFusionSuccessUnboosted = 0.5;
constexpr double kFusionSuccessBoosted = 0.78125;
// Bond percolation threshold of the degree-3 3D (10,3)-b lattice.
constexpr double kB103bBondThreshold = 0.546694;

// A bound value above 1 means percolation is impossible at any fusion
// probability; it is reported, not clamped.
struct Bound {
    double value = 0.0;
    bool attainable = true;
};

// 1/(n-1): minimum fusion success probability over all fusion strategies on
// n-photon microclusters.
double bethe_lower_bound(int n);

// 1/((n-1)(m-1)) for m-photon fusion operations.
double multinode_lower_bound(int n, int m);

// Root of x + 2x^3 = 1 in (0,1): the infinite-dimensional modified
// (10,3)-b threshold. precision must be in (0, 1e-3].
double inf_mod103b_threshold(double precision);

// Expected-offspring matrix between node classes as a function of the bond
// probability; entries must be nonnegative and nondecreasing on [0,1].
struct BranchingSpec {
    int size = 0;
    std::function<std::vector<double>(double)> matrix;  // row-major size*size
    std::string description;
};

BranchingSpec inf_mod103b_spec();
BranchingSpec bethe_spec(int n);
BranchingSpec periodic_tree_spec(int n, int g);

// Perron root of a nonnegative irreducible matrix (power iteration on M + I,
// so periodic class structures converge too).
double spectral_radius(const std::vector<double> &m, int size,
                       double rel_tol = 1e-12);

// The bond probability where the branching process turns supercritical:
// spectral radius of M(lambda) reaches 1, located by bisection.
double branching_threshold(const BranchingSpec &spec, double precision);

// (n-2)^{-1/(g+1)} (n-1)^{-g/(g+1)}: threshold of the tree with an
// unmeasured generation every g+1 levels.
double periodic_tree_threshold(int n, int g);

struct LossModel {
    double eta0 = 1.0;  // per-stage transmissivity, in (0, 1]
    int n = 2;          // microcluster size
};

// lambda_c >= 1/((n-1) eta0^{2n}).
Bound loss_lambda_lower_bound(const LossModel &model);

// eta0c >= [1/(lambda (n-1))]^{1/(2n)}.
Bound loss_eta_lower_bound(int n, double lambda);

struct OptimalN {
    int n = 0;
    double bound = 0.0;
};

// n in [n_lo, n_hi] minimizing loss_eta_lower_bound at fixed lambda; ties
// break toward smaller n. Throws if every n in range is impossible.
OptimalN optimal_n_for_lambda(double lambda, int n_lo, int n_hi);

// n minimizing loss_lambda_lower_bound at fixed eta0.
OptimalN optimal_n_for_eta(double eta0, int n_lo, int n_hi);

}  // namespace perc::analytic
