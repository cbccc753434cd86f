#include "perc/percolate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "perc/binomial.hpp"
#include "perc/rng.hpp"
#include "perc/union_find.hpp"

namespace perc::percolate {

namespace {

constexpr std::uint64_t kStreamSites = 0x51735ULL;
constexpr std::uint64_t kStreamFixed = 0xF17EDULL;
constexpr std::uint64_t kStreamPerm = 0x9E870ULL;
constexpr std::uint64_t kStreamBonds = 0xB0BD5ULL;

struct Mode {
    enum Kind { PureBond, SiteBond, KindFixed } kind = PureBond;
    double q = 1.0;  // site probability, or occupation of the fixed kind
    lattice::EdgeKind fixed_kind = lattice::EdgeKind::Blue;

    const char *name() const {
        switch (kind) {
            case PureBond: return "bond";
            case SiteBond: return "site-bond";
            case KindFixed: return "blue-series";
        }
        return "bond";
    }
};

struct Workspace {
    WindingUnionFind uf;
    std::vector<std::uint8_t> site_occ;
    std::vector<std::uint32_t> eligible;
    std::vector<std::uint32_t> largest_sz;
    std::vector<std::uint32_t> colored_sz;
    std::vector<std::int64_t> first_wrap_k;
    BinomialWindow win;
};

struct TrialResult {
    // one canonical curve per requested param, p_grid-sized
    std::vector<std::vector<double>> curves;
    TrialDiag diag;
};

void run_trial(const lattice::Lattice &lat, const Mode &mode,
               const SweepOptions &opts, const std::vector<double> &p_grid,
               std::uint64_t trial_index, Workspace &ws, TrialResult &out) {
    const std::size_t n = lat.num_nodes;
    const std::size_t m_all = lat.num_edges();
    const int dim = lat.dim();
    const std::uint64_t trial_seed = mix64(opts.seed, trial_index);

    const bool want_largest =
        std::find(opts.params.begin(), opts.params.end(),
                  OrderParam::LargestFraction) != opts.params.end();
    const bool want_colored =
        std::find(opts.params.begin(), opts.params.end(),
                  OrderParam::ColoredLargestFraction) != opts.params.end();
    const bool want_wrap =
        std::find(opts.params.begin(), opts.params.end(),
                  OrderParam::WrapProbability) != opts.params.end();
    const bool track_sizes = want_largest || want_colored;

    ws.uf.reset(n, dim, lat.color.data());

    // site pass
    std::size_t occupied_sites = n;
    if (mode.kind == Mode::SiteBond) {
        Rng site_rng(mix64(trial_seed, kStreamSites));
        ws.site_occ.resize(n);
        occupied_sites = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool occ = site_rng.next_double() < mode.q;
            ws.site_occ[i] = occ ? 1 : 0;
            occupied_sites += occ ? 1 : 0;
        }
    }

    // eligible sweep edges, canonical ascending order
    ws.eligible.clear();
    ws.first_wrap_k.assign(static_cast<std::size_t>(dim),
                           std::numeric_limits<std::int64_t>::max());
    Rng fixed_rng(mix64(trial_seed, kStreamFixed));
    for (std::size_t e = 0; e < m_all; ++e) {
        if (mode.kind == Mode::SiteBond) {
            if (ws.site_occ[lat.edge_a[e]] && ws.site_occ[lat.edge_b[e]])
                ws.eligible.push_back(static_cast<std::uint32_t>(e));
        } else if (mode.kind == Mode::KindFixed &&
                   lat.edge_kind[e] == static_cast<std::uint8_t>(mode.fixed_kind)) {
            // occupied up front, outside the sweep and the convolution
            if (fixed_rng.next_double() < mode.q) {
                std::uint32_t wrapped = 0;
                ws.uf.add_edge(lat.edge_a[e], lat.edge_b[e], lat.edge_offset(e),
                               &wrapped);
                for (int d = 0; d < dim; ++d)
                    if ((wrapped >> d) & 1u) ws.first_wrap_k[d] = 0;
            }
        } else {
            ws.eligible.push_back(static_cast<std::uint32_t>(e));
        }
    }
    const std::size_t m = ws.eligible.size();

    // random addition order
    {
        Rng perm_rng(mix64(trial_seed, kStreamPerm));
        for (std::size_t i = m; i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(perm_rng.next_below(i));
            std::swap(ws.eligible[i - 1], ws.eligible[j]);
        }
    }

    // microcanonical tracking
    std::uint32_t max_size = 0, max_colored = 0;
    std::uint32_t max_root = 0;
    if (mode.kind == Mode::SiteBond) {
        if (occupied_sites > 0) {
            std::uint32_t first = 0;
            while (!ws.site_occ[first]) ++first;
            max_root = first;
            max_size = 1;
            max_colored = (lat.color[first] != 0) ? 1 : 0;
        }
    } else if (mode.kind == Mode::KindFixed && n > 0) {
        // pre-merged bonds may already have grown components
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = ws.uf.find(static_cast<std::uint32_t>(i));
            if (r != i) continue;
            if (ws.uf.component_size(r) > max_size) {
                max_size = ws.uf.component_size(r);
                max_root = r;
                max_colored = ws.uf.component_colored(r);
            }
        }
    } else if (n > 0) {
        max_root = 0;
        max_size = 1;
        max_colored = (lat.color[0] != 0) ? 1 : 0;
    }
    if (track_sizes) {
        ws.largest_sz.assign(m + 1, 0);
        ws.colored_sz.assign(m + 1, 0);
        ws.largest_sz[0] = max_size;
        ws.colored_sz[0] = max_colored;
    }
    for (std::size_t k = 1; k <= m; ++k) {
        const std::size_t e = ws.eligible[k - 1];
        std::uint32_t wrapped = 0;
        const bool merged = ws.uf.add_edge(lat.edge_a[e], lat.edge_b[e],
                                           lat.edge_offset(e), &wrapped);
        if (merged) {
            const std::uint32_t r = ws.uf.find(lat.edge_a[e]);
            const std::uint32_t sz = ws.uf.component_size(r);
            if (sz > max_size || r == max_root) {
                max_size = sz;
                max_root = r;
                max_colored = ws.uf.component_colored(r);
            }
        } else if (wrapped != 0) {
            for (int d = 0; d < dim; ++d) {
                if (((wrapped >> d) & 1u) &&
                    ws.first_wrap_k[d] > static_cast<std::int64_t>(k))
                    ws.first_wrap_k[d] = static_cast<std::int64_t>(k);
            }
        }
        if (track_sizes) {
            ws.largest_sz[k] = max_size;
            ws.colored_sz[k] = max_colored;
        }
    }

    // canonical curves
    const double inv_n = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;
    out.curves.assign(opts.params.size(), {});
    for (auto &c : out.curves) c.assign(p_grid.size(), 0.0);
    for (std::size_t gi = 0; gi < p_grid.size(); ++gi) {
        const double p = p_grid[gi];
        const auto [klo, khi] =
            binomial_window_bounds(static_cast<std::int64_t>(m), p);
        bool need_window = track_sizes && m > 0;
        if (want_wrap && !need_window) {
            for (int d = 0; d < dim; ++d) {
                const std::int64_t ks = ws.first_wrap_k[d] ==
                                                std::numeric_limits<std::int64_t>::max()
                                            ? static_cast<std::int64_t>(m) + 1
                                            : ws.first_wrap_k[d];
                if (ks > klo && ks <= khi) {
                    need_window = true;
                    break;
                }
            }
        }
        if (need_window)
            binomial_window_into(ws.win, static_cast<std::int64_t>(m), p);
        for (std::size_t pi = 0; pi < opts.params.size(); ++pi) {
            switch (opts.params[pi]) {
                case OrderParam::LargestFraction:
                    out.curves[pi][gi] =
                        m > 0 ? convolve(ws.win, ws.largest_sz.data(), inv_n)
                              : ws.largest_sz.empty()
                                    ? 0.0
                                    : static_cast<double>(ws.largest_sz[0]) * inv_n;
                    break;
                case OrderParam::ColoredLargestFraction:
                    out.curves[pi][gi] =
                        m > 0 ? convolve(ws.win, ws.colored_sz.data(), inv_n)
                              : ws.colored_sz.empty()
                                    ? 0.0
                                    : static_cast<double>(ws.colored_sz[0]) * inv_n;
                    break;
                case OrderParam::WrapProbability: {
                    double acc = 0.0;
                    for (int d = 0; d < dim; ++d) {
                        const std::int64_t ks =
                            ws.first_wrap_k[d] ==
                                    std::numeric_limits<std::int64_t>::max()
                                ? static_cast<std::int64_t>(m) + 1
                                : ws.first_wrap_k[d];
                        if (ks > khi) {
                            // tail entirely below the window: probability 0
                        } else if (ks <= klo && !need_window) {
                            acc += 1.0;
                        } else {
                            acc += upper_tail(ws.win, ks);
                        }
                    }
                    out.curves[pi][gi] = acc / static_cast<double>(dim);
                    break;
                }
            }
        }
    }

    out.diag.eligible_bonds = m;
    out.diag.occupied_sites = occupied_sites;
    out.diag.merges = ws.uf.merge_count();
    std::size_t comps = 0;
    if (mode.kind == Mode::SiteBond) {
        for (std::size_t i = 0; i < n; ++i)
            if (ws.site_occ[i] &&
                ws.uf.find(static_cast<std::uint32_t>(i)) == i)
                ++comps;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (ws.uf.find(static_cast<std::uint32_t>(i)) == i) ++comps;
    }
    out.diag.components = comps;
}

SweepCurve run_sweep(const lattice::Lattice &lat, const Mode &mode,
                     const SweepOptions &opts) {
    if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (opts.grid_resolution <= 0.0 || opts.grid_resolution > 0.5)
        throw std::invalid_argument("grid resolution must be in (0, 0.5]");
    if (mode.kind != Mode::PureBond && (mode.q < 0.0 || mode.q > 1.0))
        throw std::invalid_argument("q must be in [0, 1]");
    const bool want_wrap =
        std::find(opts.params.begin(), opts.params.end(),
                  OrderParam::WrapProbability) != opts.params.end();
    if (want_wrap && !lat.periodic)
        throw std::invalid_argument(
            "wrap_probability requires a periodic lattice");
    if (opts.params.empty())
        throw std::invalid_argument("at least one order parameter required");

    SweepCurve sc;
    const auto steps =
        std::max<std::int64_t>(2, std::llround(1.0 / opts.grid_resolution));
    sc.p_grid.resize(static_cast<std::size_t>(steps) + 1);
    for (std::size_t i = 0; i < sc.p_grid.size(); ++i)
        sc.p_grid[i] = static_cast<double>(i) / static_cast<double>(steps);
    sc.lattice_name = lat.name;
    {
        std::ostringstream ex;
        for (std::size_t i = 0; i < lat.extents.size(); ++i)
            ex << (i ? "x" : "") << lat.extents[i];
        sc.extents = ex.str();
    }
    sc.mode = mode.name();
    sc.trials = opts.trials;
    sc.seed = opts.seed;
    sc.q = (mode.kind == Mode::PureBond) ? -1.0 : mode.q;

    std::vector<TrialResult> results(static_cast<std::size_t>(opts.trials));
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    std::vector<std::unique_ptr<Workspace>> workspaces(
        static_cast<std::size_t>(max_threads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < opts.trials; ++t) {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        auto &ws = workspaces[static_cast<std::size_t>(tid)];
        if (!ws) ws = std::make_unique<Workspace>();
        run_trial(lat, mode, opts, sc.p_grid, static_cast<std::uint64_t>(t),
                  *ws, results[static_cast<std::size_t>(t)]);
    }

    // fixed-order reduction
    const std::size_t g = sc.p_grid.size();
    sc.params.resize(opts.params.size());
    for (std::size_t pi = 0; pi < opts.params.size(); ++pi) {
        ParamCurve &pc = sc.params[pi];
        pc.tag = opts.params[pi];
        pc.mean.assign(g, 0.0);
        pc.std_error.assign(g, 0.0);
        for (std::size_t gi = 0; gi < g; ++gi) {
            detail::KahanSum s;
            for (int t = 0; t < opts.trials; ++t)
                s.add(results[static_cast<std::size_t>(t)].curves[pi][gi]);
            const double mean = s.value() / opts.trials;
            pc.mean[gi] = mean;
            if (opts.trials > 1) {
                detail::KahanSum v;
                for (int t = 0; t < opts.trials; ++t) {
                    const double d =
                        results[static_cast<std::size_t>(t)].curves[pi][gi] - mean;
                    v.add(d * d);
                }
                pc.std_error[gi] = std::sqrt(
                    v.value() / (static_cast<double>(opts.trials) *
                                 static_cast<double>(opts.trials - 1)));
            }
        }
        if (opts.keep_trial_curves) {
            pc.trial_curves.resize(static_cast<std::size_t>(opts.trials));
            for (int t = 0; t < opts.trials; ++t)
                pc.trial_curves[static_cast<std::size_t>(t)] =
                    std::move(results[static_cast<std::size_t>(t)].curves[pi]);
        }
    }
    sc.trial_diags.reserve(results.size());
    for (const TrialResult &r : results) sc.trial_diags.push_back(r.diag);
    return sc;
}

}  // namespace

const char *param_name(OrderParam p) {
    switch (p) {
        case OrderParam::LargestFraction: return "largest_fraction";
        case OrderParam::ColoredLargestFraction: return "colored_largest_fraction";
        case OrderParam::WrapProbability: return "wrap_probability";
    }
    return "largest_fraction";
}

OrderParam param_from_name(const std::string &name) {
    if (name == "largest_fraction") return OrderParam::LargestFraction;
    if (name == "colored_largest_fraction") return OrderParam::ColoredLargestFraction;
    if (name == "wrap_probability") return OrderParam::WrapProbability;
    throw std::invalid_argument("unknown order parameter: " + name);
}

const ParamCurve &SweepCurve::curve(OrderParam tag) const {
    for (const ParamCurve &pc : params)
        if (pc.tag == tag) return pc;
    throw std::invalid_argument(std::string("curve does not carry parameter ") +
                                param_name(tag));
}

SweepCurve nz_bond_sweep(const lattice::Lattice &lat, const SweepOptions &opts) {
    Mode mode;
    mode.kind = Mode::PureBond;
    return run_sweep(lat, mode, opts);
}

SweepCurve nz_site_bond_sweep(const lattice::Lattice &lat, double q,
                              const SweepOptions &opts) {
    Mode mode;
    mode.kind = Mode::SiteBond;
    mode.q = q;
    return run_sweep(lat, mode, opts);
}

SweepCurve nz_kind_fixed_sweep(const lattice::Lattice &lat,
                               lattice::EdgeKind fixed_kind, double fixed_prob,
                               const SweepOptions &opts) {
    Mode mode;
    mode.kind = Mode::KindFixed;
    mode.q = fixed_prob;
    mode.fixed_kind = fixed_kind;
    return run_sweep(lat, mode, opts);
}

OutcomeInstance sample_instance(const lattice::Lattice &lat, double p, double q,
                                std::uint64_t seed) {
    if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
        throw std::invalid_argument("p and q must be in [0, 1]");
    OutcomeInstance inst;
    inst.lat = &lat;
    inst.p = p;
    inst.q = q;
    inst.seed = seed;
    inst.site_occupied.resize(lat.num_nodes);
    inst.bond_occupied.resize(lat.num_edges());
    Rng site_rng(mix64(seed, kStreamSites));
    for (std::size_t i = 0; i < lat.num_nodes; ++i)
        inst.site_occupied[i] = (q >= 1.0 || site_rng.next_double() < q) ? 1 : 0;
    Rng bond_rng(mix64(seed, kStreamBonds));
    for (std::size_t e = 0; e < lat.num_edges(); ++e)
        inst.bond_occupied[e] = (p >= 1.0 || bond_rng.next_double() < p) ? 1 : 0;
    return inst;
}

ComponentStats component_stats(const OutcomeInstance &inst) {
    const lattice::Lattice &lat = *inst.lat;
    if (inst.bond_occupied.size() != lat.num_edges() ||
        inst.site_occupied.size() != lat.num_nodes)
        throw std::invalid_argument("instance arrays do not match its lattice");
    WindingUnionFind uf;
    uf.reset(lat.num_nodes, lat.dim(), lat.color.data());
    for (std::size_t e = 0; e < lat.num_edges(); ++e) {
        if (!inst.bond_occupied[e]) continue;
        if (!inst.site_occupied[lat.edge_a[e]] ||
            !inst.site_occupied[lat.edge_b[e]])
            continue;
        uf.add_edge(lat.edge_a[e], lat.edge_b[e], lat.edge_offset(e));
    }
    ComponentStats stats;
    for (std::size_t i = 0; i < lat.num_nodes; ++i) {
        if (!inst.site_occupied[i]) continue;
        ++stats.occupied_sites;
        const auto r = uf.find(static_cast<std::uint32_t>(i));
        if (r != i) continue;
        stats.sizes.push_back(uf.component_size(r));
        stats.colored.push_back(uf.component_colored(r));
        stats.wrap_masks.push_back(
            static_cast<std::uint8_t>(uf.component_wraps(r)));
        stats.wrap_dims |= uf.component_wraps(r);
        if (stats.sizes.back() > stats.sizes[stats.largest_index])
            stats.largest_index = stats.sizes.size() - 1;
    }
    return stats;
}

SweepCurve naive_reference_sweep(const lattice::Lattice &lat,
                                 const std::vector<double> &p_values, double q,
                                 int trials, std::uint64_t seed,
                                 const std::vector<OrderParam> &params) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    SweepCurve sc;
    sc.p_grid = p_values;
    sc.lattice_name = lat.name;
    sc.mode = q >= 1.0 ? "bond (reference)" : "site-bond (reference)";
    sc.trials = trials;
    sc.seed = seed;
    sc.q = q >= 1.0 ? -1.0 : q;
    sc.params.resize(params.size());
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
        sc.params[pi].tag = params[pi];
        sc.params[pi].mean.assign(p_values.size(), 0.0);
        sc.params[pi].std_error.assign(p_values.size(), 0.0);
    }
    const double inv_n = 1.0 / static_cast<double>(lat.num_nodes);
    for (std::size_t gi = 0; gi < p_values.size(); ++gi) {
        std::vector<detail::KahanSum> sums(params.size());
        std::vector<detail::KahanSum> sq(params.size());
        for (int t = 0; t < trials; ++t) {
            OutcomeInstance inst = sample_instance(
                lat, p_values[gi], q,
                mix64(seed, mix64(static_cast<std::uint64_t>(gi),
                                  static_cast<std::uint64_t>(t))));
            ComponentStats stats = component_stats(inst);
            for (std::size_t pi = 0; pi < params.size(); ++pi) {
                double v = 0.0;
                if (!stats.sizes.empty()) {
                    switch (params[pi]) {
                        case OrderParam::LargestFraction:
                            v = stats.sizes[stats.largest_index] * inv_n;
                            break;
                        case OrderParam::ColoredLargestFraction:
                            v = stats.colored[stats.largest_index] * inv_n;
                            break;
                        case OrderParam::WrapProbability: {
                            double acc = 0.0;
                            for (int d = 0; d < lat.dim(); ++d)
                                acc += ((stats.wrap_dims >> d) & 1u) ? 1.0 : 0.0;
                            v = acc / lat.dim();
                            break;
                        }
                    }
                }
                sums[pi].add(v);
                sq[pi].add(v * v);
            }
        }
        for (std::size_t pi = 0; pi < params.size(); ++pi) {
            const double mean = sums[pi].value() / trials;
            sc.params[pi].mean[gi] = mean;
            if (trials > 1) {
                const double var =
                    std::max(0.0, sq[pi].value() / trials - mean * mean);
                sc.params[pi].std_error[gi] =
                    std::sqrt(var / static_cast<double>(trials - 1));
            }
        }
    }
    return sc;
}

void write_curve_csv(const SweepCurve &curve, std::ostream &out) {
    char buf[64];
    out << "# lattice=" << curve.lattice_name << " extents=" << curve.extents
        << " trials=" << curve.trials << " seed=" << curve.seed;
    if (curve.q >= 0.0) {
        std::snprintf(buf, sizeof(buf), " q=%.9g", curve.q);
        out << buf;
    }
    out << " mode=" << curve.mode << "\n";
    out << "p";
    for (const ParamCurve &pc : curve.params)
        out << "," << param_name(pc.tag) << "_mean," << param_name(pc.tag)
            << "_stderr";
    out << "\n";
    for (std::size_t gi = 0; gi < curve.p_grid.size(); ++gi) {
        std::snprintf(buf, sizeof(buf), "%.9g", curve.p_grid[gi]);
        out << buf;
        for (const ParamCurve &pc : curve.params) {
            std::snprintf(buf, sizeof(buf), ",%.9g,%.9g", pc.mean[gi],
                          pc.std_error[gi]);
            out << buf;
        }
        out << "\n";
    }
}

}  // namespace perc::percolate
