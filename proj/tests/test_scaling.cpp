// Scaling-function layer: refinement masks, the cascade iteration on the
// dyadic grid, and the quadrature checks (integral, partition of unity,
// shifted inner products).

#include "splinewave/scaling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace splinewave;

namespace {

RefinementMask mask_for(int n) {
    return refinement_mask(n, spectral_factor(laurent_symbol(lorentz_q(n))));
}

} // namespace

TEST_CASE("refinement mask known values") {
    RefinementMask m1 = mask_for(1);
    REQUIRE(m1.k_min == 1);
    REQUIRE(m1.k_max == 2);
    REQUIRE(m1.p == std::vector<double>{1.0, 1.0});

    const double want3[] = {0.0498175, -0.12083221, -0.19093442,
                            0.650365, 1.1411169, 0.47046721};
    RefinementMask m3 = mask_for(3);
    REQUIRE(m3.p.size() == 6);
    for (size_t j = 0; j < 6; ++j) REQUIRE(std::abs(m3.p[j] - want3[j]) < 1e-6);

    const double want4[] = {0.32580343, 1.0109457,  0.89220014, -0.039575026,
                            -0.26450717, 0.0436163, 0.046503601, -0.014986989};
    RefinementMask m4 = mask_for(4);
    REQUIRE(m4.p.size() == 8);
    for (size_t j = 0; j < 8; ++j) REQUIRE(std::abs(m4.p[j] - want4[j]) < 1e-6);
}

TEST_CASE("refinement mask invariants") {
    for (int n = 1; n <= 12; ++n) {
        RefinementMask m = mask_for(n);
        REQUIRE(m.n == n);
        REQUIRE(m.k_min == 1);
        REQUIRE(m.k_max == 2 * n);
        REQUIRE(m.p.size() == static_cast<size_t>(2 * n));
        long double sum = 0.0L;
        for (double v : m.p) sum += v;
        REQUIRE(std::fabs(static_cast<double>(sum) - 2.0) <= 1e-12);
        REQUIRE(mask_orthonormality_residual(m) <= 1e-9);
    }
}

TEST_CASE("refinement mask rejects mismatched and complex selections") {
    FactorSolution s4 = spectral_factor(laurent_symbol(lorentz_q(4)));
    REQUIRE_THROWS_AS(refinement_mask(3, s4), std::invalid_argument);
    FactorSolution cx = factor_branch(laurent_symbol(lorentz_q(4)), "index:1");
    REQUIRE_THROWS_AS(refinement_mask(4, cx), BranchInvalid);
}

TEST_CASE("mask symbol evaluation") {
    RefinementMask m3 = mask_for(3);
    REQUIRE(std::abs(mask_symbol_eval(m3, 0.0) - 1.0) <= 1e-12);
    REQUIRE(std::abs(mask_symbol_eval(m3, 2.0 * std::numbers::pi)) <= 1e-12);
    REQUIRE(std::abs(mask_symbol_eval(m3, std::numbers::pi)) >=
            std::pow(std::cos(std::numbers::pi / 4.0), 3) - 1e-9);

    SECTION("quadrature-mirror identity and non-vanishing on [-pi, pi]") {
        for (int n = 1; n <= 12; ++n) {
            RefinementMask m = mask_for(n);
            double worst = 0.0;
            for (int t = 0; t < 2001; ++t) {
                double xi = -2.0 * std::numbers::pi + 4.0 * std::numbers::pi * t / 2000.0;
                double s = std::norm(mask_symbol_eval(m, xi)) +
                           std::norm(mask_symbol_eval(m, xi + 2.0 * std::numbers::pi));
                worst = std::max(worst, std::abs(s - 1.0));
            }
            REQUIRE(worst <= 1e-10);

            double min_abs = 1e300;
            for (int t = 0; t < 1001; ++t) {
                double xi = -std::numbers::pi + 2.0 * std::numbers::pi * t / 1000.0;
                min_abs = std::min(min_abs, std::abs(mask_symbol_eval(m, xi)));
            }
            REQUIRE(min_abs >= std::pow(std::cos(std::numbers::pi / 4.0), n) - 1e-9);
        }
    }
}

TEST_CASE("cascade reproduces the box exactly for n = 1") {
    ScalingTable t = cascade(mask_for(1), 4, 5);
    REQUIRE(t.n == 1);
    REQUIRE(t.J == 4);
    REQUIRE(t.k_min == 1);
    REQUIRE(t.k_max == 2);
    REQUIRE(t.samples.size() == 17);
    for (size_t j = 0; j < 16; ++j) REQUIRE(t.samples[j] == 1.0);
    REQUIRE(t.samples[16] == 0.0);
    REQUIRE(t.last_delta == 0.0);
    REQUIRE(!t.non_convergence);
    REQUIRE(table_integral(t) == 1.0);
    REQUIRE(pou_residual(t) == 0.0);
    auto ip = shifted_inner_products(t, 1);
    REQUIRE(ip.size() == 2);
    REQUIRE(std::abs(ip[0] - 1.0) <= 1e-12);
    REQUIRE(std::abs(ip[1]) <= 1e-12);
}

TEST_CASE("cascade quadrature properties at the default resolution") {
    for (int n = 2; n <= 4; ++n) {
        ScalingTable t = cascade(mask_for(n), 10, 25);
        REQUIRE(t.samples.size() == static_cast<size_t>((2 * n - 1) * 1024 + 1));
        REQUIRE(std::abs(table_integral(t) - 1.0) <= 1e-6);
        REQUIRE(pou_residual(t) <= 1e-4);
        REQUIRE(!t.non_convergence);
        auto ip = shifted_inner_products(t, 2 * n - 2);
        REQUIRE(std::abs(ip[0] - 1.0) <= 1e-3);
        for (size_t k = 1; k < ip.size(); ++k) REQUIRE(std::abs(ip[k]) <= 1e-3);
    }

    SECTION("iteration has settled by 25 rounds at n = 3") {
        ScalingTable t = cascade(mask_for(3), 10, 25);
        REQUIRE(t.last_delta > 0.0);
        REQUIRE(t.last_delta <= 1e-6);
    }
}

TEST_CASE("cascade preconditions") {
    RefinementMask m = mask_for(3);
    REQUIRE_THROWS_AS(cascade(m, 0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(cascade(m, 27, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(cascade(m, 8, 0), std::invalid_argument);

    RefinementMask bad = m;
    bad.p[0] += 1e-3; // breaks discrete orthonormality far beyond 1e-9
    REQUIRE_THROWS_AS(cascade(bad, 8, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(shifted_inner_products(cascade(m, 4, 5), -1), std::invalid_argument);
}
