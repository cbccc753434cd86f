#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "perc/percolate.hpp"

namespace perc::threshold {

// Lattice too small, disconnected, or otherwise without a usable crossing.
class EstimationError : public std::runtime_error {
  public:
    explicit EstimationError(const std::string &what)
        : std::runtime_error(what) {}
};

struct ThresholdEstimate {
    double p_c = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::string method;  // wrap_crossing | two_size_crossing
    std::string lattice_name;
    std::string extents;
    int trials = 0;
    std::uint64_t seed = 0;
    bool low_confidence = false;
};

struct EstimateOptions {
    int trials = 200;
    std::uint64_t seed = 7;
    double grid_resolution = 1e-3;
    int bootstrap_resamples = 200;
};

// Locates the p where the convolved wrapping probability crosses 1/2 by
// monotone piecewise-linear interpolation; the confidence interval comes
// from a trial bootstrap.
ThresholdEstimate estimate_threshold(const lattice::Lattice &lat,
                                     const EstimateOptions &opts);

// Crossing point of the wrap curves of the same construction at two extents.
ThresholdEstimate estimate_threshold_two_size(const lattice::Lattice &small_lat,
                                              const lattice::Lattice &large_lat,
                                              const EstimateOptions &opts);

// Shared crossing machinery, exposed for site-bond boundary tracing: the
// sweep must carry per-trial wrap curves.
ThresholdEstimate estimate_from_sweep(const percolate::SweepCurve &sweep,
                                      const EstimateOptions &opts);

enum class Dilution {
    Site,        // sites occupied with probability q
    BlueSeries,  // blue bonds fixed at sqrt(q); series pairs then carry q
};

struct BoundaryPoint {
    double q = 0.0;
    double p_c = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct Boundary {
    std::vector<BoundaryPoint> points;  // ascending q
    std::string lattice_name;
    std::string extents;
    std::string dilution;
    int trials = 0;
    std::uint64_t seed = 0;
};

// Critical boundary in the (q, p) plane: one threshold estimate per q value;
// q values without a crossing (below the site percolation threshold) are
// skipped.
Boundary trace_boundary(const lattice::Lattice &lat,
                        const std::vector<double> &q_grid,
                        const EstimateOptions &opts,
                        Dilution dilution = Dilution::Site);

// Intersection of the interpolated boundary with the curve q = p^k.
// Returns (p*, q*) with q* = (p*)^k; k = 0 picks the q = 1 endpoint.
std::pair<double, double> intersect(const Boundary &boundary, int k);

void write_estimate_json(const ThresholdEstimate &est, std::ostream &out);
void write_boundary_csv(const Boundary &boundary, std::ostream &out);
void write_boundary_json(const Boundary &boundary, std::ostream &out);
Boundary read_boundary_csv(std::istream &in);

}  // namespace perc::threshold
