#pragma once

#include "poly.hpp"

#include <cassert>
#include <cmath>
#include <utility>

namespace splinewave {

inline constexpr int kMaxOrder = 64; // API cap; accuracy is documented separately

inline void check_order(int n) {
    if (n < 1) throw std::invalid_argument("order n must be >= 1");
    if (n > kMaxOrder) throw std::invalid_argument("order n must be <= 64");
}

// Mask of the order-n cardinal B-spline: coefficients of ((1+z)/2)^n.
struct BsplineMask {
    int n = 0;
    std::vector<Rational> coeffs; // coeffs[j] = binomial(n,j)/2^n, j = 0..n
};

inline BsplineMask bspline_mask(int n) {
    check_order(n);
    BsplineMask m;
    m.n = n;
    m.coeffs.reserve(static_cast<size_t>(n) + 1);
    Rational d(1, pow2(n));
    for (int j = 0; j <= n; ++j) m.coeffs.push_back(Rational(binomial(n, j)) * d);
    return m;
}

// Degree-(n-1) polynomial with ((1+x)/2)^n Q(x) + ((1-x)/2)^n Q(-x) = 1,
// Q(1) = 1, Q(0) = 2^{n-1}, Q >= 1 on [-1,1].
struct QPolynomial {
    int n = 0;
    RationalPoly poly;
};

namespace detail {
inline RationalPoly half_plus_x() { return RationalPoly({Rational(1, 2), Rational(1, 2)}); }
inline RationalPoly half_minus_x() { return RationalPoly({Rational(1, 2), Rational(-1, 2)}); }

inline RationalPoly poly_pow(const RationalPoly& p, int e) {
    RationalPoly acc({Rational(1)});
    for (int i = 0; i < e; ++i) acc = poly_mul(acc, p);
    return acc;
}
} // namespace detail

// Q_n(x) = sum_{i=0}^{n-1} C(2n-1,i) ((1+x)/2)^{n-1-i} ((1-x)/2)^i, exact.
inline QPolynomial lorentz_q(int n) {
    check_order(n);
    std::vector<RationalPoly> up(static_cast<size_t>(n)), vp(static_cast<size_t>(n));
    up[0] = RationalPoly({Rational(1)});
    vp[0] = RationalPoly({Rational(1)});
    for (int i = 1; i < n; ++i) {
        up[static_cast<size_t>(i)] = poly_mul(up[static_cast<size_t>(i) - 1], detail::half_plus_x());
        vp[static_cast<size_t>(i)] = poly_mul(vp[static_cast<size_t>(i) - 1], detail::half_minus_x());
    }
    RationalPoly q;
    for (int i = 0; i < n; ++i) {
        RationalPoly term = poly_scale(
            poly_mul(up[static_cast<size_t>(n - 1 - i)], vp[static_cast<size_t>(i)]),
            Rational(binomial(2 * n - 1, i)));
        q = poly_add(q, term);
    }
    return QPolynomial{n, std::move(q)};
}

// Extended Euclidean algorithm on a = ((1+x)/2)^n, b = ((1-x)/2)^n over exact
// rationals, remainder sequence normalized monic at each step. Returns (s, t)
// with a*s + b*t = 1, deg s < n, deg t < n. Uniqueness forces s = Q_n.
inline std::pair<QPolynomial, RationalPoly> eea_q(int n) {
    check_order(n);
    RationalPoly a = detail::poly_pow(detail::half_plus_x(), n);
    RationalPoly b = detail::poly_pow(detail::half_minus_x(), n);

    RationalPoly r0 = a, r1 = b;
    RationalPoly s0({Rational(1)}), s1;
    RationalPoly t0, t1({Rational(1)});
    while (!r1.is_zero()) {
        Rational lc = r1.leading();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            r1 = poly_scale(r1, inv);
            s1 = poly_scale(s1, inv);
            t1 = poly_scale(t1, inv);
        }
        auto [q, r] = poly_divmod(r0, r1);
        RationalPoly s2 = poly_sub(s0, poly_mul(q, s1));
        RationalPoly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // gcd((1+x)^n,(1-x)^n) is a unit; anything else is a defect.
    assert(r0.degree() == 0);
    Rational unit = r0.coeff(0);
    s0 = poly_scale(s0, Rational(1) / unit);
    t0 = poly_scale(t0, Rational(1) / unit);
    assert(poly_add(poly_mul(a, s0), poly_mul(b, t0)) == RationalPoly({Rational(1)}));
    assert(s0.degree() < n && t0.degree() < n);
    return {QPolynomial{n, s0}, t0};
}

// Stable evaluation of Q_n through its defining positive-term form:
// every term C(2n-1,i) u^{n-1-i} v^i is >= 0 for x in [-1,1] (u=(1+x)/2,
// v=(1-x)/2), so the sum carries only relative rounding of order n*eps.
// Monomial Horner loses ~1e-7 absolute near x=1 at n=16 and is unusable for
// the >= 1 - 1e-12 grid checks.
inline long double q_eval_stable(const QPolynomial& q, long double x) {
    int n = q.n;
    long double u = (1.0L + x) / 2.0L, v = (1.0L - x) / 2.0L;
    std::vector<long double> up(static_cast<size_t>(n)), vp(static_cast<size_t>(n));
    up[0] = vp[0] = 1.0L;
    for (int i = 1; i < n; ++i) {
        up[static_cast<size_t>(i)] = up[static_cast<size_t>(i) - 1] * u;
        vp[static_cast<size_t>(i)] = vp[static_cast<size_t>(i) - 1] * v;
    }
    long double acc = 0.0L, c = 1.0L; // c walks C(2n-1,i)
    for (int i = 0; i < n; ++i) {
        acc += c * up[static_cast<size_t>(n - 1 - i)] * vp[static_cast<size_t>(i)];
        c = c * static_cast<long double>(2 * n - 1 - i) / static_cast<long double>(i + 1);
    }
    return acc;
}

// max over a grid_size-point equispaced grid on [-1,1] of
// |((1+x)/2)^n Q(x) + ((1-x)/2)^n Q(-x) - 1|, floating point.
inline double bezout_residual(const QPolynomial& q, int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("bezout_residual: grid_size must be >= 2");
    int n = q.n;
    long double worst = 0.0L;
    for (int i = 0; i < grid_size; ++i) {
        long double x = -1.0L + 2.0L * static_cast<long double>(i) / static_cast<long double>(grid_size - 1);
        long double u = (1.0L + x) / 2.0L, v = (1.0L - x) / 2.0L;
        long double un = 1.0L, vn = 1.0L;
        for (int j = 0; j < n; ++j) { un *= u; vn *= v; }
        long double r = un * q_eval_stable(q, x) + vn * q_eval_stable(q, -x) - 1.0L;
        worst = std::max(worst, std::fabs(r));
    }
    return static_cast<double>(worst);
}

} // namespace splinewave
