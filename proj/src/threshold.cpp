#include "perc/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "perc/binomial.hpp"
#include "perc/rng.hpp"

namespace perc::threshold {

namespace {

using percolate::OrderParam;
using percolate::SweepCurve;

struct Crossing {
    double p = 0.0;
    bool low_confidence = false;
};

// First and last upward 0.5-crossings under piecewise-linear interpolation;
// a flat stretch hugging 0.5 widens to its midpoint and is flagged.
std::optional<Crossing> half_crossing(const std::vector<double> &grid,
                                      const std::vector<double> &mean) {
    std::optional<double> first, last;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (mean[i] < 0.5 && mean[i + 1] >= 0.5) {
            const double t = (0.5 - mean[i]) / (mean[i + 1] - mean[i]);
            const double x = grid[i] + t * (grid[i + 1] - grid[i]);
            if (!first) first = x;
            last = x;
        }
    }
    if (!first) return std::nullopt;
    Crossing c;
    c.p = 0.5 * (*first + *last);
    const double step = grid.size() > 1 ? grid[1] - grid[0] : 0.0;
    c.low_confidence = (*last - *first) > 2.0 * step;
    return c;
}

std::string diagnose(const std::vector<double> &grid,
                     const std::vector<double> &mean) {
    double top = 0.0, at = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (mean[i] > top) {
            top = mean[i];
            at = grid[i];
        }
    }
    std::ostringstream os;
    os << "wrap probability never crosses 1/2 (max " << top << " at p = " << at
       << "); the lattice may be too small, diluted below its site threshold, "
          "or disconnected";
    return os.str();
}

std::vector<double> bootstrap_mean(const std::vector<std::vector<double>> &trials,
                                   const std::vector<std::uint32_t> &pick) {
    std::vector<double> mean(trials.front().size(), 0.0);
    for (const std::uint32_t t : pick) {
        const std::vector<double> &c = trials[t];
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += c[i];
    }
    const double inv = 1.0 / static_cast<double>(pick.size());
    for (double &x : mean) x *= inv;
    return mean;
}

}  // namespace

ThresholdEstimate estimate_from_sweep(const SweepCurve &sweep,
                                      const EstimateOptions &opts) {
    const percolate::ParamCurve &wrap = sweep.curve(OrderParam::WrapProbability);
    if (wrap.trial_curves.empty())
        throw std::invalid_argument(
            "estimate_from_sweep needs per-trial wrap curves");
    const auto crossing = half_crossing(sweep.p_grid, wrap.mean);
    if (!crossing) throw EstimationError(diagnose(sweep.p_grid, wrap.mean));

    ThresholdEstimate est;
    est.p_c = crossing->p;
    est.low_confidence = crossing->low_confidence;
    est.method = "wrap_crossing";
    est.lattice_name = sweep.lattice_name;
    est.extents = sweep.extents;
    est.trials = sweep.trials;
    est.seed = sweep.seed;

    const std::size_t t_count = wrap.trial_curves.size();
    Rng boot(mix64(sweep.seed, 0xB007ULL));
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(opts.bootstrap_resamples));
    std::vector<std::uint32_t> pick(t_count);
    for (int b = 0; b < opts.bootstrap_resamples; ++b) {
        for (std::uint32_t &x : pick)
            x = static_cast<std::uint32_t>(boot.next_below(t_count));
        const auto mean = bootstrap_mean(wrap.trial_curves, pick);
        if (const auto c = half_crossing(sweep.p_grid, mean)) samples.push_back(c->p);
    }
    if (samples.size() < static_cast<std::size_t>(opts.bootstrap_resamples) / 2)
        est.low_confidence = true;
    if (samples.empty()) {
        est.ci_low = est.ci_high = est.p_c;
        est.low_confidence = true;
    } else {
        std::sort(samples.begin(), samples.end());
        const auto n = samples.size();
        est.ci_low = samples[static_cast<std::size_t>(0.025 * (n - 1))];
        est.ci_high = samples[std::min(
            n - 1, static_cast<std::size_t>(std::ceil(0.975 * (n - 1))))];
    }
    est.ci_low = std::min(est.ci_low, est.p_c);
    est.ci_high = std::max(est.ci_high, est.p_c);
    return est;
}

ThresholdEstimate estimate_threshold(const lattice::Lattice &lat,
                                     const EstimateOptions &opts) {
    percolate::SweepOptions sopts;
    sopts.trials = opts.trials;
    sopts.seed = opts.seed;
    sopts.grid_resolution = opts.grid_resolution;
    sopts.params = {OrderParam::WrapProbability};
    sopts.keep_trial_curves = true;
    const SweepCurve sweep = percolate::nz_bond_sweep(lat, sopts);
    return estimate_from_sweep(sweep, opts);
}

ThresholdEstimate estimate_threshold_two_size(const lattice::Lattice &small_lat,
                                              const lattice::Lattice &large_lat,
                                              const EstimateOptions &opts) {
    percolate::SweepOptions sopts;
    sopts.trials = opts.trials;
    sopts.seed = opts.seed;
    sopts.grid_resolution = opts.grid_resolution;
    sopts.params = {OrderParam::WrapProbability};
    sopts.keep_trial_curves = true;
    const SweepCurve cs = percolate::nz_bond_sweep(small_lat, sopts);
    sopts.seed = mix64(opts.seed, 0x51E2ULL);
    const SweepCurve cl = percolate::nz_bond_sweep(large_lat, sopts);

    const auto &ws = cs.curve(OrderParam::WrapProbability);
    const auto &wl = cl.curve(OrderParam::WrapProbability);
    const std::vector<double> &grid = cs.p_grid;

    // crossing of the two curves inside the larger lattice's transition zone
    auto curve_crossing = [&grid](const std::vector<double> &a,
                                  const std::vector<double> &b)
        -> std::optional<double> {
        std::optional<double> found;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            if (b[i] < 0.05 || b[i + 1] > 0.98) continue;
            const double d0 = a[i] - b[i];
            const double d1 = a[i + 1] - b[i + 1];
            if (d0 >= 0.0 && d1 < 0.0) {
                const double t = d0 / (d0 - d1);
                found = grid[i] + t * (grid[i + 1] - grid[i]);
            }
        }
        return found;
    };
    const auto cross = curve_crossing(ws.mean, wl.mean);
    if (!cross)
        throw EstimationError(
            "wrap curves at the two extents do not cross inside the "
            "transition region");

    ThresholdEstimate est;
    est.p_c = *cross;
    est.method = "two_size_crossing";
    est.lattice_name = large_lat.name;
    est.extents = cs.extents + "|" + cl.extents;
    est.trials = opts.trials;
    est.seed = opts.seed;

    Rng boot(mix64(opts.seed, 0xB007ULL));
    std::vector<double> samples;
    std::vector<std::uint32_t> pick_s(ws.trial_curves.size());
    std::vector<std::uint32_t> pick_l(wl.trial_curves.size());
    for (int b = 0; b < opts.bootstrap_resamples; ++b) {
        for (std::uint32_t &x : pick_s)
            x = static_cast<std::uint32_t>(boot.next_below(pick_s.size()));
        for (std::uint32_t &x : pick_l)
            x = static_cast<std::uint32_t>(boot.next_below(pick_l.size()));
        const auto ms = bootstrap_mean(ws.trial_curves, pick_s);
        const auto ml = bootstrap_mean(wl.trial_curves, pick_l);
        if (const auto c = curve_crossing(ms, ml)) samples.push_back(*c);
    }
    if (samples.empty()) {
        est.ci_low = est.ci_high = est.p_c;
        est.low_confidence = true;
    } else {
        std::sort(samples.begin(), samples.end());
        const auto n = samples.size();
        est.ci_low = samples[static_cast<std::size_t>(0.025 * (n - 1))];
        est.ci_high = samples[std::min(
            n - 1, static_cast<std::size_t>(std::ceil(0.975 * (n - 1))))];
        if (samples.size() <
            static_cast<std::size_t>(opts.bootstrap_resamples) / 2)
            est.low_confidence = true;
    }
    est.ci_low = std::min(est.ci_low, est.p_c);
    est.ci_high = std::max(est.ci_high, est.p_c);
    return est;
}

Boundary trace_boundary(const lattice::Lattice &lat,
                        const std::vector<double> &q_grid,
                        const EstimateOptions &opts, Dilution dilution) {
    Boundary boundary;
    boundary.lattice_name = lat.name;
    boundary.dilution = dilution == Dilution::Site ? "site" : "blue-series";
    boundary.trials = opts.trials;
    boundary.seed = opts.seed;
    std::vector<double> qs = q_grid;
    std::sort(qs.begin(), qs.end());
    for (const double q : qs) {
        if (q <= 0.0 || q > 1.0)
            throw std::invalid_argument("boundary q values must lie in (0, 1]");
        percolate::SweepOptions sopts;
        sopts.trials = opts.trials;
        sopts.seed = mix64(opts.seed, static_cast<std::uint64_t>(
                                          std::llround(q * 1e9)));
        sopts.grid_resolution = opts.grid_resolution;
        sopts.params = {OrderParam::WrapProbability};
        sopts.keep_trial_curves = true;
        SweepCurve sweep;
        if (dilution == Dilution::Site) {
            sweep = percolate::nz_site_bond_sweep(lat, q, sopts);
        } else {
            sweep = percolate::nz_kind_fixed_sweep(lat, lattice::EdgeKind::Blue,
                                                   std::sqrt(q), sopts);
        }
        boundary.extents = sweep.extents;
        try {
            const ThresholdEstimate est = estimate_from_sweep(sweep, opts);
            boundary.points.push_back({q, est.p_c, est.ci_low, est.ci_high});
        } catch (const EstimationError &) {
            // below the site percolation threshold: no crossing at this q
        }
    }
    if (boundary.points.empty())
        throw EstimationError("no q value in the grid admits percolation");
    return boundary;
}

std::pair<double, double> intersect(const Boundary &boundary, int k) {
    if (boundary.points.empty())
        throw std::invalid_argument("empty boundary");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const auto &pts = boundary.points;
    if (k == 0) {
        for (const BoundaryPoint &pt : pts)
            if (std::abs(pt.q - 1.0) < 1e-12) return {pt.p_c, 1.0};
        throw EstimationError("boundary does not contain the q = 1 point");
    }
    auto pc_at = [&pts](double q) {
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (q >= pts[i].q && q <= pts[i + 1].q) {
                const double t = (q - pts[i].q) / (pts[i + 1].q - pts[i].q);
                return pts[i].p_c + t * (pts[i + 1].p_c - pts[i].p_c);
            }
        }
        return pts.back().p_c;
    };
    const double p_lo = std::pow(pts.front().q, 1.0 / k);
    const double p_hi = std::pow(pts.back().q, 1.0 / k);
    const int steps = 4000;
    double prev_p = p_lo;
    double prev_f = pc_at(std::pow(p_lo, k)) - p_lo;
    for (int i = 1; i <= steps; ++i) {
        const double p = p_lo + (p_hi - p_lo) * i / steps;
        const double f = pc_at(std::pow(p, k)) - p;
        if ((prev_f >= 0.0 && f < 0.0) || (prev_f <= 0.0 && f > 0.0)) {
            const double t = prev_f / (prev_f - f);
            const double p_star = prev_p + t * (p - prev_p);
            return {p_star, std::pow(p_star, k)};
        }
        prev_p = p;
        prev_f = f;
    }
    throw EstimationError("q = p^k does not cross the boundary in range");
}

void write_estimate_json(const ThresholdEstimate &est, std::ostream &out) {
    nlohmann::ordered_json j;
    j["lattice"] = est.lattice_name;
    j["extents"] = est.extents;
    j["method"] = est.method;
    j["p_c"] = est.p_c;
    j["ci_low"] = est.ci_low;
    j["ci_high"] = est.ci_high;
    j["trials"] = est.trials;
    j["seed"] = est.seed;
    if (est.low_confidence) j["low_confidence"] = true;
    out << j.dump(2) << "\n";
}

void write_boundary_csv(const Boundary &boundary, std::ostream &out) {
    char buf[128];
    out << "# lattice=" << boundary.lattice_name
        << " extents=" << boundary.extents << " trials=" << boundary.trials
        << " seed=" << boundary.seed << " dilution=" << boundary.dilution
        << "\n";
    out << "q,p_c,ci_low,ci_high\n";
    for (const BoundaryPoint &pt : boundary.points) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g\n", pt.q, pt.p_c,
                      pt.ci_low, pt.ci_high);
        out << buf;
    }
}

void write_boundary_json(const Boundary &boundary, std::ostream &out) {
    nlohmann::ordered_json j;
    j["lattice"] = boundary.lattice_name;
    j["extents"] = boundary.extents;
    j["dilution"] = boundary.dilution;
    j["trials"] = boundary.trials;
    j["seed"] = boundary.seed;
    j["points"] = nlohmann::ordered_json::array();
    for (const BoundaryPoint &pt : boundary.points)
        j["points"].push_back({{"q", pt.q},
                               {"p_c", pt.p_c},
                               {"ci_low", pt.ci_low},
                               {"ci_high", pt.ci_high}});
    out << j.dump(2) << "\n";
}

Boundary read_boundary_csv(std::istream &in) {
    Boundary boundary;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'q') continue;
        BoundaryPoint pt;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &pt.q, &pt.p_c,
                        &pt.ci_low, &pt.ci_high) != 4)
            throw std::invalid_argument("bad boundary CSV line: " + line);
        boundary.points.push_back(pt);
    }
    std::sort(boundary.points.begin(), boundary.points.end(),
              [](const BoundaryPoint &a, const BoundaryPoint &b) {
                  return a.q < b.q;
              });
    return boundary;
}

}  // namespace perc::threshold
