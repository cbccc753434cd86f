#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace perc {

// Binomial(M, p) restricted to a window around the mode that carries all but
// a negligible (< 1e-20) tail. Weights are produced by the two-sided
// recurrence from the mode and summed in fixed ascending-k order, so results
// are bit-reproducible.
struct BinomialWindow {
    std::int64_t klo = 0;
    std::int64_t khi = 0;
    std::vector<double> w;  // w[k - klo]
    double sum = 0.0;       // compensated sum of the window weights
};

namespace detail {
// Compensated (Kahan) accumulator; fixed-order summation.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};
}  // namespace detail

constexpr double kBinomialWindowSigmas = 10.0;
constexpr std::int64_t kBinomialWindowMinHalf = 48;

inline std::pair<std::int64_t, std::int64_t> binomial_window_bounds(
    std::int64_t m, double p) {
    if (m <= 0 || p <= 0.0 || p >= 1.0) {
        const std::int64_t k = (p >= 1.0) ? m : 0;
        return {k, k};
    }
    const double mean = p * static_cast<double>(m);
    const double sigma = std::sqrt(mean * (1.0 - p));
    const auto half = static_cast<std::int64_t>(kBinomialWindowSigmas * sigma) +
                      kBinomialWindowMinHalf;
    std::int64_t mode =
        static_cast<std::int64_t>(std::floor(p * static_cast<double>(m + 1)));
    mode = std::clamp<std::int64_t>(mode, 0, m);
    return {std::max<std::int64_t>(0, mode - half),
            std::min<std::int64_t>(m, mode + half)};
}

inline void binomial_window_into(BinomialWindow &win, std::int64_t m, double p) {
    const auto [klo, khi] = binomial_window_bounds(m, p);
    win.klo = klo;
    win.khi = khi;
    win.w.assign(static_cast<std::size_t>(khi - klo + 1), 0.0);
    if (m <= 0 || p <= 0.0 || p >= 1.0) {
        win.w[0] = 1.0;
        win.sum = 1.0;
        return;
    }
    std::int64_t mode =
        static_cast<std::int64_t>(std::floor(p * static_cast<double>(m + 1)));
    mode = std::clamp<std::int64_t>(mode, 0, m);
    const double md = static_cast<double>(m);
    const double logw_mode =
        std::lgamma(md + 1.0) - std::lgamma(static_cast<double>(mode) + 1.0) -
        std::lgamma(md - static_cast<double>(mode) + 1.0) +
        static_cast<double>(mode) * std::log(p) +
        (md - static_cast<double>(mode)) * std::log1p(-p);
    const double r = p / (1.0 - p);
    win.w[static_cast<std::size_t>(mode - klo)] = std::exp(logw_mode);
    for (std::int64_t k = mode; k < khi; ++k) {
        const double step =
            r * (md - static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
        win.w[static_cast<std::size_t>(k + 1 - klo)] =
            win.w[static_cast<std::size_t>(k - klo)] * step;
    }
    for (std::int64_t k = mode; k > klo; --k) {
        const double step = static_cast<double>(k) /
                            (r * (md - static_cast<double>(k) + 1.0));
        win.w[static_cast<std::size_t>(k - 1 - klo)] =
            win.w[static_cast<std::size_t>(k - klo)] * step;
    }
    // normalize away the lgamma rounding of the mode weight (the true mass
    // outside the window is < 1e-20)
    detail::KahanSum raw;
    for (const double x : win.w) raw.add(x);
    const double inv = 1.0 / raw.value();
    for (double &x : win.w) x *= inv;
    detail::KahanSum acc;
    for (const double x : win.w) acc.add(x);
    win.sum = acc.value();
}

inline BinomialWindow binomial_window(std::int64_t m, double p) {
    BinomialWindow win;
    binomial_window_into(win, m, p);
    return win;
}

// Convolves microcanonical values q[0..m] (indexed by bond count) with the
// window: sum_k w_k * q_k * scale in fixed ascending-k order.
inline double convolve(const BinomialWindow &win, const std::uint32_t *q,
                       double scale) {
    detail::KahanSum acc;
    for (std::int64_t k = win.klo; k <= win.khi; ++k)
        acc.add(win.w[static_cast<std::size_t>(k - win.klo)] *
                (static_cast<double>(q[k]) * scale));
    return acc.value();
}

// P[Binomial >= kstar] evaluated on the window (step-function convolution).
inline double upper_tail(const BinomialWindow &win, std::int64_t kstar) {
    if (kstar <= win.klo) return win.sum;
    if (kstar > win.khi) return 0.0;
    detail::KahanSum acc;
    for (std::int64_t k = kstar; k <= win.khi; ++k)
        acc.add(win.w[static_cast<std::size_t>(k - win.klo)]);
    return acc.value();
}

}  // namespace perc
