#pragma once

#include "rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace splinewave {

// Polynomial over exact rationals, ascending powers of x (x = cos(xi/2) on [-1,1]).
// Normalized: no trailing zero coefficients; the zero polynomial is the empty vector.
struct RationalPoly {
    std::vector<Rational> coeffs;

    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    // Degree of the zero polynomial is a distinguished state; -1 stands in for it.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs.size())) return Rational(0);
        return coeffs[static_cast<size_t>(k)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs.back(); }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.coeffs == b.coeffs;
    }
};

inline RationalPoly poly_add(const RationalPoly& p, const RationalPoly& q) {
    std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
    for (size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
    return RationalPoly(std::move(c));
}

inline RationalPoly poly_sub(const RationalPoly& p, const RationalPoly& q) {
    std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
    for (size_t i = 0; i < q.coeffs.size(); ++i) c[i] -= q.coeffs[i];
    return RationalPoly(std::move(c));
}

inline RationalPoly poly_mul(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) return RationalPoly();
    std::vector<Rational> c(p.coeffs.size() + q.coeffs.size() - 1, Rational(0));
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        for (size_t j = 0; j < q.coeffs.size(); ++j) c[i + j] += p.coeffs[i] * q.coeffs[j];
    return RationalPoly(std::move(c));
}

inline RationalPoly poly_scale(const RationalPoly& p, const Rational& s) {
    if (s == 0) return RationalPoly();
    std::vector<Rational> c = p.coeffs;
    for (auto& v : c) v *= s;
    return RationalPoly(std::move(c));
}

// Horner evaluation in floating point.
inline double poly_eval(const RationalPoly& p, double x) {
    double acc = 0.0;
    for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + to_double(p.coeffs[i]);
    return acc;
}

// Horner evaluation in exact rationals.
inline Rational poly_eval_exact(const RationalPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + p.coeffs[i];
    return acc;
}

// p(-x): negate odd coefficients.
inline RationalPoly poly_reflect(const RationalPoly& p) {
    std::vector<Rational> c = p.coeffs;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RationalPoly(std::move(c));
}

// Quotient/remainder over rationals; q non-zero.
inline std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& p,
                                                         const RationalPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    RationalPoly rem = p;
    std::vector<Rational> quot;
    int dq = q.degree();
    if (rem.degree() >= dq) quot.assign(static_cast<size_t>(rem.degree() - dq) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dq) {
        int shift = rem.degree() - dq;
        Rational f = rem.leading() / q.leading();
        quot[static_cast<size_t>(shift)] = f;
        std::vector<Rational> c = rem.coeffs;
        for (int i = 0; i <= dq; ++i)
            c[static_cast<size_t>(i + shift)] -= f * q.coeff(i);
        rem = RationalPoly(std::move(c));
    }
    return {RationalPoly(std::move(quot)), rem};
}

// Finite series sum_k c_k cos(k xi/2), exact coefficients.
struct CosineSeries {
    std::vector<Rational> coeffs; // c_0..c_m

    CosineSeries() = default;
    explicit CosineSeries(std::vector<Rational> c) : coeffs(std::move(c)) {}

    friend bool operator==(const CosineSeries& a, const CosineSeries& b) {
        return a.coeffs == b.coeffs;
    }
};

// Chebyshev polynomials T_0..T_m via T_{k+1} = 2x T_k - T_{k-1}, exact.
inline std::vector<RationalPoly> chebyshev_basis(int m) {
    std::vector<RationalPoly> T;
    T.reserve(static_cast<size_t>(m) + 1);
    T.push_back(RationalPoly({Rational(1)}));
    if (m >= 1) T.push_back(RationalPoly({Rational(0), Rational(1)}));
    const RationalPoly two_x({Rational(0), Rational(2)});
    for (int k = 2; k <= m; ++k)
        T.push_back(poly_sub(poly_mul(two_x, T[static_cast<size_t>(k) - 1]),
                             T[static_cast<size_t>(k) - 2]));
    return T;
}

// sum_k c_k T_k(x): cos(k xi/2) = T_k(cos(xi/2)).
inline RationalPoly cosine_to_poly(const CosineSeries& s) {
    int m = static_cast<int>(s.coeffs.size()) - 1;
    if (m < 0) return RationalPoly();
    auto T = chebyshev_basis(m);
    RationalPoly acc;
    for (int k = 0; k <= m; ++k)
        acc = poly_add(acc, poly_scale(T[static_cast<size_t>(k)], s.coeffs[static_cast<size_t>(k)]));
    return acc;
}

// Inverse of cosine_to_poly: peel leading Chebyshev terms (lead of T_k is 2^{k-1}).
inline CosineSeries poly_to_cosine(const RationalPoly& p) {
    if (p.is_zero()) return CosineSeries();
    int m = p.degree();
    auto T = chebyshev_basis(m);
    std::vector<Rational> c(static_cast<size_t>(m) + 1, Rational(0));
    RationalPoly rest = p;
    for (int k = m; k >= 1; --k) {
        if (rest.degree() < k) continue;
        Rational ck = rest.coeff(k) / T[static_cast<size_t>(k)].leading();
        c[static_cast<size_t>(k)] = ck;
        rest = poly_sub(rest, poly_scale(T[static_cast<size_t>(k)], ck));
    }
    c[0] = rest.coeff(0);
    return CosineSeries(std::move(c));
}

} // namespace splinewave
