#pragma once

#include <complex>

namespace splinewave::detail {

// Double-double arithmetic (~106-bit significand): value = hi + lo with
// |lo| <= ulp(hi)/2. Error-free transforms use Dekker's splitting, so no FMA
// support is assumed. Magnitudes here stay far from the splitting overflow
// threshold (~2^996). Used where coefficient chains must come out correctly
// rounded at long double width even after cancellation-prone expansions.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
    DD() = default;
    DD(double h) : hi(h) {}
    DD(double h, double l) : hi(h), lo(l) {}
    static DD from_ld(long double x) {
        double h = static_cast<double>(x);
        return {h, static_cast<double>(x - static_cast<long double>(h))};
    }
    long double to_ld() const { return static_cast<long double>(hi) + static_cast<long double>(lo); }
};

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void quick_two_sum(double a, double b, double& s, double& e) { // needs |a| >= |b|
    s = a + b;
    e = b - (s - a);
}

inline void split(double a, double& hi, double& lo) {
    double t = 134217729.0 * a; // 2^27 + 1
    hi = t - (t - a);
    lo = a - hi;
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
}

inline DD dd_add(const DD& a, const DD& b) {
    double s1, s2, t1, t2;
    two_sum(a.hi, b.hi, s1, s2);
    two_sum(a.lo, b.lo, t1, t2);
    s2 += t1;
    quick_two_sum(s1, s2, s1, s2);
    s2 += t2;
    DD r;
    quick_two_sum(s1, s2, r.hi, r.lo);
    return r;
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }
inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
    double p1, p2;
    two_prod(a.hi, b.hi, p1, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    DD r;
    quick_two_sum(p1, p2, r.hi, r.lo);
    return r;
}

inline DD dd_div(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, DD(q1)));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, DD(q2)));
    double q3 = r.hi / b.hi;
    double s, e;
    quick_two_sum(q1, q2, s, e);
    return dd_add(DD(s, e), DD(q3));
}

struct DDComplex {
    DD re, im;
    DDComplex() = default;
    DDComplex(DD r, DD i) : re(r), im(i) {}
    explicit DDComplex(double r) : re(r), im(0.0) {}
    static DDComplex from_ld(const std::complex<long double>& z) {
        return {DD::from_ld(z.real()), DD::from_ld(z.imag())};
    }
    std::complex<long double> to_ld() const { return {re.to_ld(), im.to_ld()}; }
};

inline DDComplex ddc_add(const DDComplex& a, const DDComplex& b) {
    return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}
inline DDComplex ddc_sub(const DDComplex& a, const DDComplex& b) {
    return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)};
}
inline DDComplex ddc_mul(const DDComplex& a, const DDComplex& b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}
inline DDComplex ddc_div(const DDComplex& a, const DDComplex& b) {
    DD d = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    return {dd_div(dd_add(dd_mul(a.re, b.re), dd_mul(a.im, b.im)), d),
            dd_div(dd_sub(dd_mul(a.im, b.re), dd_mul(a.re, b.im)), d)};
}

} // namespace splinewave::detail
