#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "perc/lattice.hpp"

namespace perc::percolate {

enum class OrderParam : int {
    LargestFraction = 0,
    ColoredLargestFraction = 1,
    WrapProbability = 2,
};

const char *param_name(OrderParam p);
OrderParam param_from_name(const std::string &name);

struct SweepOptions {
    int trials = 100;
    std::uint64_t seed = 7;
    double grid_resolution = 1e-3;
    std::vector<OrderParam> params = {OrderParam::WrapProbability,
                                      OrderParam::LargestFraction};
    bool keep_trial_curves = false;
};

struct ParamCurve {
    OrderParam tag = OrderParam::LargestFraction;
    std::vector<double> mean;
    std::vector<double> std_error;
    // per-trial canonical curves (trials x grid), kept on request for
    // bootstrap resampling
    std::vector<std::vector<double>> trial_curves;
};

struct TrialDiag {
    std::size_t eligible_bonds = 0;
    std::size_t occupied_sites = 0;
    std::size_t merges = 0;
    std::size_t components = 0;
};

struct SweepCurve {
    std::vector<double> p_grid;
    std::vector<ParamCurve> params;
    std::string lattice_name;
    std::string extents;
    std::string mode;  // bond | site-bond | blue-series
    int trials = 0;
    std::uint64_t seed = 0;
    double q = -1.0;  // site (or series-coupling) probability; -1 for pure bond
    std::vector<TrialDiag> trial_diags;

    const ParamCurve &curve(OrderParam tag) const;
};

// Newman-Ziff bond percolation sweep: per trial, bonds are added in a
// uniformly random order under union-find while the microcanonical order
// parameters are recorded, then convolved with Binomial(M, p) onto the grid.
// Trials are independent (OpenMP) and reduced in fixed trial order, so the
// result depends only on (lattice, trials, seed).
SweepCurve nz_bond_sweep(const lattice::Lattice &lat, const SweepOptions &opts);

// Site-bond variant: sites are first occupied independently with probability
// q; only bonds between two occupied sites participate in the sweep.
SweepCurve nz_site_bond_sweep(const lattice::Lattice &lat, double q,
                              const SweepOptions &opts);

// Mixed-kind variant: edges of `fixed_kind` are occupied up front with the
// given probability (as pre-merged bonds outside the convolution); all other
// edges are swept in p. With fixed_prob = sqrt(q) on the blue bonds of the
// two-layer lattice this traces the stuck-open-layer site-bond boundary.
SweepCurve nz_kind_fixed_sweep(const lattice::Lattice &lat,
                               lattice::EdgeKind fixed_kind, double fixed_prob,
                               const SweepOptions &opts);

struct OutcomeInstance {
    const lattice::Lattice *lat = nullptr;
    std::vector<std::uint8_t> bond_occupied;
    std::vector<std::uint8_t> site_occupied;
    double p = 0.0;
    double q = 1.0;
    std::uint64_t seed = 0;
};

OutcomeInstance sample_instance(const lattice::Lattice &lat, double p, double q,
                                std::uint64_t seed);

struct ComponentStats {
    std::vector<std::uint32_t> sizes;
    std::vector<std::uint32_t> colored;     // nonzero-color nodes per component
    std::vector<std::uint8_t> wrap_masks;   // per component, bit d = wraps dim d
    std::uint32_t wrap_dims = 0;            // union over components
    std::size_t largest_index = 0;
    std::size_t occupied_sites = 0;
};

ComponentStats component_stats(const OutcomeInstance &inst);

// Serial reference estimator: direct canonical sampling at each requested p.
// Slow but independent of the Newman-Ziff/convolution path; kept for tests
// and benchmarks.
SweepCurve naive_reference_sweep(const lattice::Lattice &lat,
                                 const std::vector<double> &p_values,
                                 double q, int trials, std::uint64_t seed,
                                 const std::vector<OrderParam> &params);

// CSV: "# lattice=... extents=... trials=... seed=... q=..." then
// "p,<param>_mean,<param>_stderr,..." with 9 significant digits.
void write_curve_csv(const SweepCurve &curve, std::ostream &out);

}  // namespace perc::percolate
