#include <doctest.h>


#include <stdexcept>
#include <cmath>

#include "perc/analytic.hpp"

using namespace perc::analytic;

TEST_CASE("bethe lower bound") {
    CHECK(bethe_lower_bound(3) == 0.5);
    CHECK(bethe_lower_bound(2) == 1.0);
    CHECK(bethe_lower_bound(5) == 0.25);
    CHECK_THROWS_AS(bethe_lower_bound(1), std::invalid_argument);
}

TEST_CASE("multinode lower bound") {
    CHECK(multinode_lower_bound(3, 2) == 0.5);
    CHECK(multinode_lower_bound(3, 3) == 0.25);
    CHECK(multinode_lower_bound(4, 4) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(multinode_lower_bound(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(multinode_lower_bound(4, 1), std::invalid_argument);
}

TEST_CASE("infinite-dimensional modified (10,3)-b threshold") {
    // high-precision bisection oracle: 0.589754512301458...
    const double r = inf_mod103b_threshold(1e-9);
    CHECK(std::abs(r - 0.5897545123) < 2e-9);
    CHECK(std::abs(r - 0.589755) < 1e-6);
    const double r4 = inf_mod103b_threshold(1e-4);
    CHECK(std::abs(r4 - 0.5898) < 1e-4 + 5e-5);
    CHECK(std::abs(r4 + 2.0 * r4 * r4 * r4 - 1.0) < 10.0 * 1e-4);
    CHECK_THROWS_AS(inf_mod103b_threshold(0.01), std::invalid_argument);
    CHECK_THROWS_AS(inf_mod103b_threshold(0.0), std::invalid_argument);
}

TEST_CASE("branching threshold reproduces the two-class result") {
    const double r = branching_threshold(inf_mod103b_spec(), 1e-7);
    CHECK(std::abs(r - inf_mod103b_threshold(1e-7)) < 3e-7);
    CHECK(std::abs(r - 0.5898) < 1e-3);
}

TEST_CASE("branching threshold on the single-class Bethe spec") {
    for (int n = 3; n <= 10; ++n) {
        const double r = branching_threshold(bethe_spec(n), 1e-8);
        CHECK(std::abs(r - 1.0 / (n - 1)) < 1e-7);
    }
}

TEST_CASE("branching threshold matches the periodic-tree closed form") {
    for (int n = 3; n <= 5; ++n) {
        for (int g = 1; g <= 4; ++g) {
            const double r = branching_threshold(periodic_tree_spec(n, g), 1e-8);
            CHECK(std::abs(r - periodic_tree_threshold(n, g)) < 1e-6);
        }
    }
}

TEST_CASE("periodic tree threshold closed form") {
    CHECK(periodic_tree_threshold(3, 2) ==
          doctest::Approx(std::pow(2.0, -2.0 / 3.0)).epsilon(1e-14));
    CHECK(std::abs(periodic_tree_threshold(3, 2) - 0.6300) < 1e-4);
    // g -> infinity approaches 1/(n-1)
    CHECK(std::abs(periodic_tree_threshold(3, 1000) - 0.5) < 1e-2);
    // defining identity
    for (int n = 3; n <= 8; ++n) {
        for (int g = 1; g <= 6; ++g) {
            const double l = periodic_tree_threshold(n, g);
            CHECK(std::abs(l * (n - 2) * std::pow(l * (n - 1), g) - 1.0) < 1e-12);
        }
    }
    CHECK_THROWS_AS(periodic_tree_threshold(2, 3), std::invalid_argument);
}

TEST_CASE("periodic tree threshold is decreasing in g and in n") {
    for (int n = 3; n <= 8; ++n)
        for (int g = 1; g <= 8; ++g)
            CHECK(periodic_tree_threshold(n, g + 1) < periodic_tree_threshold(n, g));
    for (int g = 1; g <= 8; ++g)
        for (int n = 3; n <= 8; ++n)
            CHECK(periodic_tree_threshold(n + 1, g) < periodic_tree_threshold(n, g));
}

TEST_CASE("loss lambda lower bound") {
    CHECK(loss_lambda_lower_bound({1.0, 3}).value == 0.5);
    const Bound b = loss_lambda_lower_bound({0.9, 6});
    CHECK(std::abs(b.value - 0.7081) < 1e-4);
    CHECK(b.attainable);
    const Bound imp = loss_lambda_lower_bound({0.5, 3});
    CHECK(imp.value == doctest::Approx(32.0).epsilon(1e-12));
    CHECK_FALSE(imp.attainable);
}

TEST_CASE("lossless reduction to the Bethe bound") {
    for (int n = 2; n <= 50; ++n)
        CHECK(loss_lambda_lower_bound({1.0, n}).value ==
              doctest::Approx(bethe_lower_bound(n)).epsilon(1e-14));
}

TEST_CASE("loss eta lower bound") {
    CHECK(std::abs(loss_eta_lower_bound(6, 0.75).value - 0.8957) < 5e-5);
    CHECK(std::abs(loss_eta_lower_bound(6, 0.75).value - 0.895703066436403) < 1e-12);
    CHECK(std::abs(loss_eta_lower_bound(5, 1.0).value - 0.8706) < 1e-4);
    CHECK(loss_eta_lower_bound(2, 1.0).value == doctest::Approx(1.0).epsilon(1e-14));
    // lambda (n-1) < 1 is reported as impossible (value above one)
    const Bound imp = loss_eta_lower_bound(2, 0.5);
    CHECK(imp.value > 1.0);
    CHECK_FALSE(imp.attainable);
}

TEST_CASE("loss eta bound is decreasing in lambda and unimodal in n") {
    for (int n = 2; n <= 50; ++n) {
        double prev = loss_eta_lower_bound(n, 0.55).value;
        for (int i = 65; i <= 100; i += 10) {
            const double cur = loss_eta_lower_bound(n, i / 100.0).value;
            CHECK(cur < prev);
            prev = cur;
        }
    }
    for (int li = 55; li <= 100; li += 5) {
        const double l = li / 100.0;
        int sign_changes = 0;
        double prev = loss_eta_lower_bound(2, l).value;
        bool decreasing = false;
        for (int n = 3; n <= 50; ++n) {
            const double cur = loss_eta_lower_bound(n, l).value;
            if (cur < prev) {
                decreasing = true;
            } else if (decreasing) {
                ++sign_changes;
                decreasing = false;
            }
            prev = cur;
        }
        CHECK(sign_changes <= 1);  // one interior minimum
    }
}

TEST_CASE("optimal microcluster size") {
    const OptimalN a = optimal_n_for_lambda(0.75, 2, 20);
    CHECK(a.n == 6);
    CHECK(std::abs(a.bound - 0.8957) < 5e-5);
    const OptimalN b = optimal_n_for_lambda(1.0, 2, 20);
    CHECK(b.n == 5);
    CHECK(std::abs(b.bound - 0.871) < 1e-3);
    const OptimalN c = optimal_n_for_eta(0.9, 2, 20);
    CHECK(c.n == 6);
    CHECK(std::abs(c.bound - 0.7081) < 1e-4);
    CHECK_THROWS_AS(optimal_n_for_eta(0.3, 2, 20), std::invalid_argument);
}

TEST_CASE("exposed constants") {
    CHECK(kFusionSuccessUnboosted == 0.5);
    CHECK(kFusionSuccessBoosted == 0.78125);
    CHECK(kB103bBondThreshold == 0.546694);
    // consistency chain: 0.5 <= lambda_c(3) <= 0.5898
    const double inf = inf_mod103b_threshold(1e-6);
    CHECK(inf > 0.5);
    CHECK(inf < 0.5898 + 1e-4);
}
