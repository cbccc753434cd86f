#include <doctest.h>

#include <cmath>

#include "perc/binomial.hpp"

using perc::binomial_window;
using perc::upper_tail;

namespace {
double exact_binom(int m, int k, double p) {
    return std::exp(std::lgamma(m + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(m - k + 1.0)) *
           std::pow(p, k) * std::pow(1.0 - p, m - k);
}
}  // namespace

TEST_CASE("window weights match the direct formula on a small M") {
    const int m = 12;
    for (const double p : {0.1, 0.35, 0.5, 0.77}) {
        const auto win = binomial_window(m, p);
        REQUIRE(win.klo == 0);
        REQUIRE(win.khi == m);
        for (int k = 0; k <= m; ++k)
            CHECK(win.w[k] == doctest::Approx(exact_binom(m, k, p)).epsilon(1e-12));
    }
}

TEST_CASE("weights sum to one within 1e-12 at every p on the grid") {
    for (const std::int64_t m : {1LL, 7LL, 100LL, 4096LL}) {
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            const auto win = binomial_window(m, p);
            CHECK(std::abs(win.sum - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("weights sum to one at large M") {
    for (const double p : {0.001, 0.1, 0.5, 0.627, 0.99}) {
        const auto win = binomial_window(1000000, p);
        CHECK(std::abs(win.sum - 1.0) < 1e-12);
    }
}

TEST_CASE("degenerate p puts all mass at the edge") {
    auto w0 = binomial_window(50, 0.0);
    CHECK(w0.klo == 0);
    CHECK(w0.khi == 0);
    CHECK(w0.sum == 1.0);
    auto w1 = binomial_window(50, 1.0);
    CHECK(w1.klo == 50);
    CHECK(w1.khi == 50);
}

TEST_CASE("upper tail agrees with direct summation") {
    const int m = 20;
    const double p = 0.4;
    const auto win = binomial_window(m, p);
    for (int kstar = 0; kstar <= m + 1; ++kstar) {
        double direct = 0.0;
        for (int k = kstar; k <= m; ++k) direct += exact_binom(m, k, p);
        CHECK(upper_tail(win, kstar) == doctest::Approx(direct).epsilon(1e-10));
    }
    CHECK(upper_tail(win, 0) == win.sum);
    CHECK(upper_tail(win, m + 1) == 0.0);
}
