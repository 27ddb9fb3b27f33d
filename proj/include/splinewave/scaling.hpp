#pragma once

#include "factor.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace splinewave {

// Refinement coefficients p_k, k = k_min..k_max (here 1..2n), of
// phi(x) = sum_k p_k phi(2x - k), with P(z) = (1/2) sum_k p_k z^k = B_n(z) S_n(z)
// and sum p_k = 2.
struct RefinementMask {
    int n = 0;
    int k_min = 1;
    int k_max = 0;
    std::vector<double> p; // p[j] is p_{k_min + j}
};

inline RefinementMask refinement_mask(int n, const FactorSolution& s) {
    check_order(n);
    if (s.n != n) throw std::invalid_argument("refinement_mask: solution order mismatch");
    if (!s.real)
        throw BranchInvalid("refinement_mask: selection has complex coefficients, no real mask exists");
    // p_k = 2 [z^k] B_n(z) S_n(z), B_n(z) = sum_j binom(n,j)/2^n z^j, S_n has a_1..a_n.
    std::vector<long double> b(static_cast<size_t>(n) + 1);
    BigInt denom = pow2(n);
    for (int j = 0; j <= n; ++j)
        b[static_cast<size_t>(j)] = to_long_double(Rational(binomial(n, j), denom));
    RefinementMask m;
    m.n = n;
    m.k_min = 1;
    m.k_max = 2 * n;
    m.p.assign(static_cast<size_t>(2 * n), 0.0);
    for (int k = 1; k <= 2 * n; ++k) {
        long double acc = 0.0L;
        for (int i = std::max(1, k - n); i <= std::min(n, k); ++i)
            acc += b[static_cast<size_t>(k - i)] * s.a_ld[static_cast<size_t>(i - 1)].real();
        m.p[static_cast<size_t>(k - 1)] = static_cast<double>(2.0L * acc);
    }
    return m;
}

// max over shifts m of |sum_k p_k p_{k+2m} - 2 delta_{m0}|.
inline double mask_orthonormality_residual(const RefinementMask& m) {
    const auto& p = m.p;
    const int len = static_cast<int>(p.size());
    double worst = 0.0;
    for (int shift = 0; 2 * shift < len; ++shift) {
        long double acc = 0.0L;
        for (int k = 0; k + 2 * shift < len; ++k)
            acc += static_cast<long double>(p[static_cast<size_t>(k)]) *
                   static_cast<long double>(p[static_cast<size_t>(k + 2 * shift)]);
        if (shift == 0) acc -= 2.0L;
        worst = std::max(worst, static_cast<double>(std::fabs(acc)));
    }
    return worst;
}

// P(e^{-i xi/2}) = (1/2) sum_k p_k e^{-i k xi/2}.
inline std::complex<double> mask_symbol_eval(const RefinementMask& m, double xi) {
    std::complex<double> z = std::polar(1.0, -xi / 2.0);
    std::complex<double> acc = 0.0;
    for (size_t j = m.p.size(); j-- > 0;) acc = acc * z + m.p[j];
    for (int k = 0; k < m.k_min; ++k) acc *= z; // ... * z^{k_min}
    return 0.5 * acc;
}

// Samples of the cascade iterate on the dyadic grid x = k_min + j 2^{-J},
// j = 0..(k_max-k_min) 2^J. Values outside [k_min, k_max] are exactly 0.
struct ScalingTable {
    int n = 0;
    int J = 0;
    int k_min = 1;
    int k_max = 0;
    std::vector<double> samples;
    double last_delta = 0.0;      // sup|phi^(last) - phi^(last-1)| on the grid
    bool non_convergence = false; // sup differences grew over the final 3 iterations
};

// Cascade iteration phi^(m+1)(x) = sum_k p_k phi^(m)(2x - k), started from the
// box indicator on [k_min, k_min+1). With x = k_min + j h, h = 2^{-J}, the
// argument 2x - k lies on the same grid at index 2j + (k_min - k) 2^J, so each
// step is exact index arithmetic, no interpolation.
inline ScalingTable cascade(const RefinementMask& mask, int J, int iters) {
    if (J < 1 || J > 26) throw std::invalid_argument("cascade: J must be in [1, 26]");
    if (iters < 1) throw std::invalid_argument("cascade: iters must be >= 1");
    if (mask_orthonormality_residual(mask) > 1e-9)
        throw std::invalid_argument("cascade: mask fails discrete orthonormality within 1e-9");

    const int64_t S = int64_t{1} << J;
    const int width = mask.k_max - mask.k_min; // support length 2n - 1
    const int64_t M = static_cast<int64_t>(width) * S;

    ScalingTable t;
    t.n = mask.n;
    t.J = J;
    t.k_min = mask.k_min;
    t.k_max = mask.k_max;
    t.samples.assign(static_cast<size_t>(M) + 1, 0.0);
    for (int64_t j = 0; j < std::min(S, M + 1); ++j) t.samples[static_cast<size_t>(j)] = 1.0;

    std::vector<double> next(t.samples.size());
    double d1 = 0.0, d2 = 0.0, d3 = 0.0; // last three sup differences
    for (int it = 0; it < iters; ++it) {
        for (int64_t j = 0; j <= M; ++j) {
            double acc = 0.0;
            for (int k = mask.k_min; k <= mask.k_max; ++k) {
                int64_t src = 2 * j + static_cast<int64_t>(mask.k_min - k) * S;
                if (src >= 0 && src <= M)
                    acc += mask.p[static_cast<size_t>(k - mask.k_min)] *
                           t.samples[static_cast<size_t>(src)];
            }
            next[static_cast<size_t>(j)] = acc;
        }
        double delta = 0.0;
        for (size_t j = 0; j < next.size(); ++j)
            delta = std::max(delta, std::fabs(next[j] - t.samples[j]));
        d1 = d2;
        d2 = d3;
        d3 = delta;
        t.samples.swap(next);
    }
    t.last_delta = d3;
    t.non_convergence = iters >= 3 && d3 > d2 && d2 > d1;
    return t;
}

// Riemann integral 2^{-J} sum_j phi(x_j); exact for the box fixed point.
inline double table_integral(const ScalingTable& t) {
    long double acc = 0.0L;
    for (double v : t.samples) acc += v;
    return static_cast<double>(std::ldexp(acc, -t.J));
}

// max over one unit subgrid x in [k_min, k_min+1) of |sum_k phi(x+k) - 1|.
inline double pou_residual(const ScalingTable& t) {
    const int64_t S = int64_t{1} << t.J;
    const int width = t.k_max - t.k_min;
    double worst = 0.0;
    for (int64_t j = 0; j < S; ++j) {
        long double acc = 0.0L;
        for (int m = 0; m < width; ++m)
            acc += t.samples[static_cast<size_t>(j + static_cast<int64_t>(m) * S)];
        worst = std::max(worst, static_cast<double>(std::fabs(acc - 1.0L)));
    }
    return worst;
}

// Quadrature estimates of <phi, phi(. - k)> for k = 0..max_shift: trapezoid
// rule on the common grid, which reduces to the plain sum h * sum_j q_j since
// the integrand vanishes at the support boundary (half-open sampling makes
// this exact for the n = 1 box).
inline std::vector<double> shifted_inner_products(const ScalingTable& t, int max_shift) {
    if (max_shift < 0) throw std::invalid_argument("shifted_inner_products: negative shift");
    const int64_t S = int64_t{1} << t.J;
    const int64_t M = static_cast<int64_t>(t.samples.size()) - 1;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(max_shift) + 1);
    for (int k = 0; k <= max_shift; ++k) {
        long double acc = 0.0L;
        for (int64_t j = static_cast<int64_t>(k) * S; j <= M; ++j)
            acc += static_cast<long double>(t.samples[static_cast<size_t>(j)]) *
                   static_cast<long double>(t.samples[static_cast<size_t>(j - k * S)]);
        out.push_back(static_cast<double>(std::ldexp(acc, -t.J)));
    }
    return out;
}

} // namespace splinewave
