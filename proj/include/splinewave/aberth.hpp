#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace splinewave {

using Quad = boost::multiprecision::cpp_bin_float_quad;

// Simultaneous-iteration (Aberth-Ehrlich) root finder for a monic real
// polynomial given by ascending coefficients (back() == 1). Initial guesses sit
// on a circle of radius slightly off 1 with an irrational angle offset so the
// start configuration shares no symmetry with the reciprocal/conjugate root
// structure. Stops when every correction is <= tol relative. Large coefficient
// norms put the evaluation rounding floor above tol (corrections then bounce on
// noise, not distance to the root); once every correction is below 1e-8 the
// iteration is allowed 15 further sweeps to reach tol before the floor is
// accepted -- the caller's quad-precision polish and residual gate carry the
// accuracy from there. Throws ConvergenceFailure when the budget runs out.
inline std::vector<std::complex<long double>> aberth_roots(
    const std::vector<long double>& monic, long double tol = 1e-13L, int max_sweeps = 500) {
    const int d = static_cast<int>(monic.size()) - 1;
    std::vector<std::complex<long double>> z(static_cast<size_t>(d));
    const long double radius = 1.12L, offset = 0.40123L;
    for (int j = 0; j < d; ++j) {
        long double ang = 2.0L * std::numbers::pi_v<long double> * (j + 0.5L) / d + offset;
        z[static_cast<size_t>(j)] = std::polar(radius, ang);
    }
    auto eval = [&](std::complex<long double> x, std::complex<long double>& p,
                    std::complex<long double>& dp) {
        p = monic[static_cast<size_t>(d)];
        dp = 0.0L;
        for (int k = d - 1; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + monic[static_cast<size_t>(k)];
        }
    };
    int floor_sweeps = 0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        long double worst = 0.0L;
        for (int j = 0; j < d; ++j) {
            std::complex<long double> p, dp;
            eval(z[static_cast<size_t>(j)], p, dp);
            if (std::abs(p) == 0.0L) continue;
            if (std::abs(dp) == 0.0L) { // landed on a critical point; nudge
                z[static_cast<size_t>(j)] += 1e-3L;
                worst = 1.0L;
                continue;
            }
            std::complex<long double> w = p / dp;
            std::complex<long double> sum = 0.0L;
            for (int k = 0; k < d; ++k)
                if (k != j) sum += 1.0L / (z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)]);
            std::complex<long double> denom = 1.0L - w * sum;
            std::complex<long double> corr = (std::abs(denom) < 1e-30L) ? w : w / denom;
            z[static_cast<size_t>(j)] -= corr;
            long double rel = std::abs(corr) / std::max(1.0L, std::abs(z[static_cast<size_t>(j)]));
            worst = std::max(worst, rel);
        }
        if (worst <= tol) return z;
        if (worst <= 1e-8L && ++floor_sweeps >= 15) return z;
    }
    throw ConvergenceFailure("aberth_roots: correction tolerance not reached in sweep budget");
}

namespace detail {

struct QuadComplex {
    Quad re, im;
};
inline QuadComplex qc_mul(const QuadComplex& a, const QuadComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QuadComplex qc_sub(const QuadComplex& a, const QuadComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline QuadComplex qc_div(const QuadComplex& a, const QuadComplex& b) {
    Quad d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

} // namespace detail

// Three Newton sweeps in quad precision against the exact rational
// coefficients. The raw roots can sit at the long-double evaluation floor
// (up to ~1e-10 relative for the largest coefficient norms); quadratic
// convergence in quad precision pins them to the long double ulp.
inline std::vector<std::complex<long double>> newton_polish(
    const std::vector<Rational>& monic_exact, std::vector<std::complex<long double>> roots) {
    const int d = static_cast<int>(monic_exact.size()) - 1;
    std::vector<Quad> c(static_cast<size_t>(d) + 1), dc(static_cast<size_t>(d));
    for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = monic_exact[static_cast<size_t>(k)].convert_to<Quad>();
    for (int k = 1; k <= d; ++k) dc[static_cast<size_t>(k) - 1] = c[static_cast<size_t>(k)] * k;
    for (auto& r : roots) {
        detail::QuadComplex x{Quad(r.real()), Quad(r.imag())};
        for (int it = 0; it < 3; ++it) {
            detail::QuadComplex p{c[static_cast<size_t>(d)], Quad(0)};
            for (int k = d - 1; k >= 0; --k)
                p = {p.re * x.re - p.im * x.im + c[static_cast<size_t>(k)],
                     p.re * x.im + p.im * x.re};
            detail::QuadComplex dp{dc[static_cast<size_t>(d) - 1], Quad(0)};
            for (int k = d - 2; k >= 0; --k)
                dp = {dp.re * x.re - dp.im * x.im + dc[static_cast<size_t>(k)],
                      dp.re * x.im + dp.im * x.re};
            if (dp.re == 0 && dp.im == 0) break;
            x = detail::qc_sub(x, detail::qc_div(p, dp));
        }
        r = std::complex<long double>(x.re.convert_to<long double>(),
                                      x.im.convert_to<long double>());
    }
    return roots;
}

} // namespace splinewave
