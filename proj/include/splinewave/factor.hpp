#pragma once

#include "aberth.hpp"
#include "dd.hpp"
#include "errors.hpp"
#include "symbol.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <numbers>
#include <string>

namespace splinewave {

// L(z) = c_0 + sum_{k>=1} c_k (z^k + z^{-k})/2 with L(e^{-i xi/2}) = Q_n(cos(xi/2));
// the c_k are the cosine-basis coefficients of Q_n, kept exact alongside doubles.
struct LaurentSymbol {
    int n = 0;
    std::vector<Rational> c_exact;
    std::vector<double> c;
};

inline LaurentSymbol laurent_symbol(const QPolynomial& q) {
    LaurentSymbol L;
    L.n = q.n;
    L.c_exact = poly_to_cosine(q.poly).coeffs;
    L.c.reserve(L.c_exact.size());
    for (const auto& r : L.c_exact) L.c.push_back(to_double(r));
    return L;
}

// One reciprocal pair (r, 1/r); conj_partner indexes the pair holding the
// complex conjugates (the pair's own index when the pair is real).
struct ReciprocalPair {
    std::complex<long double> outer; // |outer| > 1
    std::complex<long double> inner; // = 1/outer
    int conj_partner = -1;
};

struct RootSet {
    int n = 0;
    std::vector<std::complex<double>> roots; // all 2(n-1) roots
    std::vector<ReciprocalPair> pairs;       // n-1 reciprocal pairs
};

namespace detail {

// Ascending coefficients of the monic degree-2(n-1) polynomial z^{n-1} L(z),
// exact: m[d -+ k] += c_k/2, m[d] = c_0, divided by the leading c_{n-1}/2.
inline std::vector<Rational> symbol_monic_exact(const LaurentSymbol& L) {
    int d = L.n - 1;
    std::vector<Rational> m(static_cast<size_t>(2 * d) + 1, Rational(0));
    m[static_cast<size_t>(d)] = L.c_exact[0];
    for (int k = 1; k <= d; ++k) {
        Rational half = L.c_exact[static_cast<size_t>(k)] / 2;
        m[static_cast<size_t>(d + k)] += half;
        m[static_cast<size_t>(d - k)] += half;
    }
    Rational lead = m.back();
    for (auto& v : m) v /= lead;
    return m;
}

} // namespace detail

inline RootSet symbol_roots(const LaurentSymbol& L) {
    RootSet rs;
    rs.n = L.n;
    if (L.n == 1) return rs; // S_1(z) = z, nothing to factor

    std::vector<Rational> monic_exact = detail::symbol_monic_exact(L);
    std::vector<long double> monic(monic_exact.size());
    for (size_t i = 0; i < monic.size(); ++i) monic[i] = to_long_double(monic_exact[i]);

    auto roots = newton_polish(monic_exact, aberth_roots(monic));

    // residual gate |p(r)| / ||p||_1 <= 1e-11
    long double norm1 = 0.0L;
    for (long double c : monic) norm1 += std::fabs(c);
    for (const auto& r : roots) {
        std::complex<long double> p = monic.back();
        for (int k = static_cast<int>(monic.size()) - 2; k >= 0; --k)
            p = p * r + monic[static_cast<size_t>(k)];
        if (std::abs(p) / norm1 > 1e-11L)
            throw ConvergenceFailure("symbol_roots: root residual above 1e-11 after iteration");
    }
    for (const auto& r : roots)
        if (std::fabs(std::log(std::abs(r))) <= 1e-8L)
            throw PairingFailure("symbol_roots: root on the unit circle");

    // Greedy reciprocal pairing, largest modulus first; tolerance 1e-6 on |r*s - 1|.
    const size_t m = roots.size();
    std::vector<size_t> order(m);
    for (size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return std::abs(roots[a]) > std::abs(roots[b]); });
    std::vector<bool> used(m, false);
    for (size_t oi : order) {
        if (used[oi]) continue;
        used[oi] = true;
        size_t best = m;
        long double best_err = 0.0L;
        for (size_t k = 0; k < m; ++k) {
            if (used[k]) continue;
            long double err = std::abs(roots[oi] * roots[k] - 1.0L);
            if (best == m || err < best_err) { best = k; best_err = err; }
        }
        if (best == m || best_err > 1e-6L)
            throw PairingFailure("symbol_roots: reciprocal partner not found within 1e-6");
        used[best] = true;
        rs.pairs.push_back({roots[oi], roots[best], -1});
    }

    // Deterministic pair order: Re(outer) descending, then Im(outer) ascending.
    std::sort(rs.pairs.begin(), rs.pairs.end(), [](const ReciprocalPair& a, const ReciprocalPair& b) {
        if (a.outer.real() != b.outer.real()) return a.outer.real() > b.outer.real();
        return a.outer.imag() < b.outer.imag();
    });

    // Conjugate grouping, tolerance 1e-9 on imaginary-part symmetry.
    const long double ctol = 1e-9L;
    for (size_t i = 0; i < rs.pairs.size(); ++i) {
        if (rs.pairs[i].conj_partner >= 0) continue;
        long double scale = 1.0L + std::abs(rs.pairs[i].outer);
        if (std::fabs(rs.pairs[i].outer.imag()) <= ctol * scale) {
            rs.pairs[i].conj_partner = static_cast<int>(i);
            continue;
        }
        bool found = false;
        for (size_t j = i + 1; j < rs.pairs.size(); ++j) {
            if (rs.pairs[j].conj_partner >= 0) continue;
            if (std::abs(rs.pairs[j].outer - std::conj(rs.pairs[i].outer)) <= ctol * scale) {
                rs.pairs[i].conj_partner = static_cast<int>(j);
                rs.pairs[j].conj_partner = static_cast<int>(i);
                found = true;
                break;
            }
        }
        if (!found) throw PairingFailure("symbol_roots: conjugate partner not found within 1e-9");
    }

    rs.roots.reserve(m);
    for (const auto& pr : rs.pairs) {
        rs.roots.push_back(std::complex<double>(static_cast<double>(pr.outer.real()),
                                                static_cast<double>(pr.outer.imag())));
        rs.roots.push_back(std::complex<double>(static_cast<double>(pr.inner.real()),
                                                static_cast<double>(pr.inner.imag())));
    }
    return rs;
}

// One branch of the factorization S_n(z) = a_1 z + ... + a_n z^n, S_n(1) = 1.
// Selections that are closed under conjugation give real a (stored in a_real);
// the remaining per-pair selections are legitimate solutions of the coefficient
// system with complex a and real = false.
struct FactorSolution {
    int n = 0;
    std::vector<std::complex<double>> a;        // a[i] is a_{i+1}
    std::vector<double> a_real;                 // filled when real
    bool real = true;
    std::vector<int> bits;                      // per reciprocal pair: 0 outer, 1 inner
    std::string branch;                         // descriptor, e.g. "paper", "index:3"
    std::vector<std::complex<double>> roots_selected;
    std::vector<std::complex<long double>> a_ld; // working precision copy
    std::complex<long double> sum_sq{0.0L, 0.0L}; // sum a_i^2, carried from construction
};

namespace detail {

inline bool bits_conjugation_closed(const RootSet& rs, const std::vector<int>& bits) {
    for (size_t j = 0; j < rs.pairs.size(); ++j)
        if (bits[j] != bits[static_cast<size_t>(rs.pairs[j].conj_partner)]) return false;
    return true;
}

// Expand S(z)/z = C * prod (z - r) in double-double arithmetic: the mixed
// selections overshoot in their partial products, and the sum_sq-versus-c_0
// identity is checked to 1e-9 absolute against c_0 values up to ~5e7, which
// needs the coefficients correct beyond the long double working precision.
inline FactorSolution build_solution(const RootSet& rs, const std::vector<int>& bits,
                                     std::string branch) {
    FactorSolution s;
    s.n = rs.n;
    s.bits = bits;
    s.branch = std::move(branch);
    if (rs.n == 1) { // S_1(z) = z
        s.a_ld = {1.0L};
        s.a = {1.0};
        s.a_real = {1.0};
        s.sum_sq = 1.0L;
        return s;
    }
    std::vector<std::complex<long double>> sel(rs.pairs.size());
    for (size_t j = 0; j < rs.pairs.size(); ++j)
        sel[j] = bits[j] ? rs.pairs[j].inner : rs.pairs[j].outer;

    std::vector<DDComplex> poly{DDComplex(1.0)};
    for (const auto& r : sel) {
        DDComplex rd = DDComplex::from_ld(r);
        std::vector<DDComplex> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ddc_add(next[i + 1], poly[i]);
            next[i] = ddc_sub(next[i], ddc_mul(poly[i], rd));
        }
        poly = std::move(next);
    }
    DDComplex at_one(0.0);
    for (const auto& c : poly) at_one = ddc_add(at_one, c);
    DDComplex scale = ddc_div(DDComplex(1.0), at_one);

    s.real = bits_conjugation_closed(rs, bits);
    s.a_ld.resize(poly.size());
    s.a.resize(poly.size());
    DDComplex sq(0.0);
    for (size_t i = 0; i < poly.size(); ++i) {
        DDComplex ai = ddc_mul(scale, poly[i]);
        if (s.real) ai.im = DD(0.0);
        sq = ddc_add(sq, ddc_mul(ai, ai));
        s.a_ld[i] = ai.to_ld();
        s.a[i] = std::complex<double>(static_cast<double>(s.a_ld[i].real()),
                                      static_cast<double>(s.a_ld[i].imag()));
    }
    s.sum_sq = sq.to_ld();
    if (s.real) {
        s.a_real.resize(poly.size());
        for (size_t i = 0; i < poly.size(); ++i) s.a_real[i] = s.a[i].real();
    }
    s.roots_selected.reserve(sel.size());
    for (const auto& r : sel)
        s.roots_selected.push_back(std::complex<double>(static_cast<double>(r.real()),
                                                        static_cast<double>(r.imag())));
    return s;
}

} // namespace detail

// Bits for the branch reproducing the printed reference solutions: modulus > 1
// from every pair, except n = 3 where the complement (modulus < 1) matches.
inline std::vector<int> paper_bits(int n) {
    check_order(n);
    return std::vector<int>(static_cast<size_t>(n - 1), n == 3 ? 1 : 0);
}

// Branch index k (lexicographic over pair choice bits, pair 0 most significant).
inline std::vector<int> index_bits(int n, unsigned long long k) {
    check_order(n);
    int g = n - 1;
    if (g >= 64 || k >= (1ull << g))
        throw std::invalid_argument("branch index out of range");
    std::vector<int> bits(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) bits[static_cast<size_t>(j)] = static_cast<int>((k >> (g - 1 - j)) & 1u);
    return bits;
}

inline std::vector<int> parse_branch(int n, const std::string& desc) {
    if (desc == "paper") return paper_bits(n);
    if (desc.rfind("index:", 0) == 0) {
        size_t pos = 0;
        unsigned long long k = 0;
        try {
            k = std::stoull(desc.substr(6), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("branch: malformed index in '" + desc + "'");
        }
        if (pos != desc.size() - 6)
            throw std::invalid_argument("branch: malformed index in '" + desc + "'");
        return index_bits(n, k);
    }
    throw std::invalid_argument("branch: expected 'paper' or 'index:<k>', got '" + desc + "'");
}

// Single-branch factorization. The selection must be conjugation-closed (real
// coefficients); other selections are reachable through enumerate_solutions.
inline FactorSolution spectral_factor(const LaurentSymbol& L, const std::vector<int>& bits,
                                      const std::string& label = "") {
    if (L.n == 1) return detail::build_solution(RootSet{1, {}, {}}, {}, label.empty() ? "paper" : label);
    RootSet rs = symbol_roots(L);
    if (static_cast<int>(bits.size()) != L.n - 1)
        throw std::invalid_argument("spectral_factor: branch has wrong length");
    if (!detail::bits_conjugation_closed(rs, bits))
        throw BranchInvalid("spectral_factor: selection not closed under conjugation");
    return detail::build_solution(rs, bits, label);
}

inline FactorSolution spectral_factor(const LaurentSymbol& L, const std::string& desc = "paper") {
    if (L.n == 1) return detail::build_solution(RootSet{1, {}, {}}, {}, desc);
    return spectral_factor(L, parse_branch(L.n, desc), desc);
}

// Like spectral_factor, but admits selections that are not closed under
// conjugation, returning their complex coefficient vectors instead of
// rejecting them.
inline FactorSolution factor_branch(const LaurentSymbol& L, const std::vector<int>& bits,
                                    const std::string& label = "") {
    if (L.n == 1) return detail::build_solution(RootSet{1, {}, {}}, {}, label.empty() ? "paper" : label);
    if (static_cast<int>(bits.size()) != L.n - 1)
        throw std::invalid_argument("factor_branch: branch has wrong length");
    return detail::build_solution(symbol_roots(L), bits, label);
}

inline FactorSolution factor_branch(const LaurentSymbol& L, const std::string& desc) {
    if (L.n == 1) return detail::build_solution(RootSet{1, {}, {}}, {}, desc);
    return factor_branch(L, parse_branch(L.n, desc), desc);
}

// Every per-pair selection, 2^{n-1} of them, in lexicographic bit order
// (index 0 = all modulus > 1). Selections not closed under conjugation are
// included with complex coefficients.
inline std::vector<FactorSolution> enumerate_solutions(const LaurentSymbol& L) {
    std::vector<FactorSolution> out;
    if (L.n == 1) {
        out.push_back(detail::build_solution(RootSet{1, {}, {}}, {}, "index:0"));
        return out;
    }
    RootSet rs = symbol_roots(L);
    int g = L.n - 1;
    unsigned long long count = 1ull << g;
    out.reserve(count);
    for (unsigned long long k = 0; k < count; ++k)
        out.push_back(detail::build_solution(rs, index_bits(L.n, k), "index:" + std::to_string(k)));
    return out;
}

// ---- residual checks -------------------------------------------------------

inline std::complex<long double> solution_sum_a(const FactorSolution& s) {
    std::complex<long double> sum = 0.0L;
    for (const auto& v : s.a_ld) sum += v;
    return sum;
}

// sum a_i^2 equals c_0 for every branch (coefficient of z^0 in S(z)S(1/z)),
// complex ones included. The value is carried from the double-double
// construction; recomputing it from the rounded a_ld would lose the digits
// the 1e-9 absolute comparison against c_0 ~ 5e7 depends on.
inline std::complex<long double> solution_sum_a_sq(const FactorSolution& s) {
    return s.sum_sq;
}

namespace detail {

inline std::complex<long double> horner_a(const FactorSolution& s,
                                          std::complex<long double> z) {
    // S(z) = z * (a_1 + a_2 z + ... + a_n z^{n-1})
    std::complex<long double> acc = 0.0L;
    for (size_t i = s.a_ld.size(); i-- > 0;) acc = acc * z + s.a_ld[i];
    return acc * z;
}

} // namespace detail

// max over a points-long xi grid on [0, 2pi] of |S(z)S(1/z) - L(z)|, z = e^{-i xi/2}.
// For conjugation-closed branches S(1/z) = conj(S(z)) on |z| = 1, so this is the
// |S|^2 comparison; the product form extends it to complex branches.
inline double solution_identity_residual(const LaurentSymbol& L, const FactorSolution& s,
                                         int points = 1001) {
    long double worst = 0.0L;
    std::vector<long double> cl(L.c_exact.size());
    for (size_t k = 0; k < cl.size(); ++k) cl[k] = to_long_double(L.c_exact[k]);
    for (int t = 0; t < points; ++t) {
        long double xi = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(t) /
                         static_cast<long double>(points - 1);
        std::complex<long double> z = std::polar(1.0L, -xi / 2.0L);
        std::complex<long double> prod =
            detail::horner_a(s, z) * detail::horner_a(s, 1.0L / z);
        long double lval = cl[0];
        for (size_t k = 1; k < cl.size(); ++k)
            lval += cl[k] * std::cos(static_cast<long double>(k) * xi / 2.0L);
        worst = std::max(worst, std::abs(prod - lval));
    }
    return static_cast<double>(worst);
}

// Shared per-n tables for the branch QMF sweep over xi in [-2pi, 2pi]:
// grid point t has xi_t = -2pi + t*4pi/(points-1); with points = 2001 the
// shift xi + 2pi lands exactly on index t +- (points-1)/2, so each branch needs
// F(xi) = A(xi) S(z)S(1/z) only once per point. A(xi) = P_n(z)P_n(1/z) =
// ((1+cos(xi/2))/2)^n is branch-independent.
struct QmfGrid {
    int n = 0;
    int points = 0;
    std::vector<double> A;
    std::vector<std::complex<double>> z;    // e^{-i xi_t / 2}
    std::vector<std::complex<double>> zinv; // e^{+i xi_t / 2}
};

inline QmfGrid make_qmf_grid(int n, int points = 2001) {
    if (points < 3 || points % 2 == 0)
        throw std::invalid_argument("make_qmf_grid: points must be odd and >= 3");
    QmfGrid g;
    g.n = n;
    g.points = points;
    g.A.resize(static_cast<size_t>(points));
    g.z.resize(static_cast<size_t>(points));
    g.zinv.resize(static_cast<size_t>(points));
    for (int t = 0; t < points; ++t) {
        double xi = -2.0 * std::numbers::pi + 4.0 * std::numbers::pi * t / (points - 1);
        g.A[static_cast<size_t>(t)] = std::pow((1.0 + std::cos(xi / 2.0)) / 2.0, n);
        g.z[static_cast<size_t>(t)] = std::polar(1.0, -xi / 2.0);
        g.zinv[static_cast<size_t>(t)] = std::polar(1.0, xi / 2.0);
    }
    return g;
}

// max over the grid of |P(z)P(1/z) + P(-z)P(-1/z) - 1| with P = P_n S for one
// branch. Double precision suffices: the pointwise evaluation error is bounded
// by ~2 sum|a_k| eps because |P_n|^2 |S| <= 1/|S| <= 1 on the circle.
inline double solution_qmf_residual(const FactorSolution& s, const QmfGrid& grid) {
    const int pts = grid.points, half = (grid.points - 1) / 2;
    std::vector<std::complex<double>> a(s.a.begin(), s.a.end());
    std::vector<std::complex<double>> F(static_cast<size_t>(pts));
    for (int t = 0; t < pts; ++t) {
        std::complex<double> s1 = 0.0, s2 = 0.0;
        for (size_t i = a.size(); i-- > 0;) {
            s1 = s1 * grid.z[static_cast<size_t>(t)] + a[i];
            s2 = s2 * grid.zinv[static_cast<size_t>(t)] + a[i];
        }
        s1 *= grid.z[static_cast<size_t>(t)];
        s2 *= grid.zinv[static_cast<size_t>(t)];
        F[static_cast<size_t>(t)] = grid.A[static_cast<size_t>(t)] * s1 * s2;
    }
    double worst = 0.0;
    for (int t = 0; t < pts; ++t) {
        int u = (t <= half) ? t + half : t - half;
        worst = std::max(worst, std::abs(F[static_cast<size_t>(t)] + F[static_cast<size_t>(u)] - 1.0));
    }
    return worst;
}

// QMF residuals for every branch at once. The per-branch products share almost
// all of their factors, so the sweep walks the selections in Gray-code order:
// (z - r)(1/z - r) = (1 + r^2) - r w with w = z + 1/z = 2 cos(xi/2) real, and
// flipping one pair between its outer and inner root multiplies the running
// product by one precomputed ratio. The products are rebuilt from scratch
// every few hundred steps so rounding cannot accumulate along the walk (the
// drift of a ~512-multiply chain stays near 1e-13, far below the residual
// tolerance). Result[k] is the max-over-grid residual of branch "index:k".
inline std::vector<double> qmf_residual_all_branches(const RootSet& rs, int points = 2001) {
    if (points < 3 || points % 2 == 0)
        throw std::invalid_argument("qmf_residual_all_branches: points must be odd and >= 3");
    if (rs.n > 21)
        throw std::invalid_argument("qmf_residual_all_branches: too many branches");
    const int n = rs.n, g = n - 1, half = (points - 1) / 2;
    const size_t count = size_t{1} << g;
    using C = std::complex<double>;

    std::vector<C> outer(static_cast<size_t>(g)), inner(static_cast<size_t>(g)),
        opo(static_cast<size_t>(g)), opi(static_cast<size_t>(g)),
        omo(static_cast<size_t>(g)), omi(static_cast<size_t>(g));
    for (size_t j = 0; j < static_cast<size_t>(g); ++j) {
        const auto& pr = rs.pairs[j];
        outer[j] = C(static_cast<double>(pr.outer.real()), static_cast<double>(pr.outer.imag()));
        inner[j] = C(static_cast<double>(pr.inner.real()), static_cast<double>(pr.inner.imag()));
        opo[j] = 1.0 + outer[j] * outer[j];
        opi[j] = 1.0 + inner[j] * inner[j];
        omo[j] = 1.0 - outer[j];
        omi[j] = 1.0 - inner[j];
    }

    // Normalization C^2 = 1 / prod(1 - r_sel)^2 per branch, by its own walk.
    std::vector<C> c2(count);
    {
        C prod = 1.0;
        for (size_t j = 0; j < static_cast<size_t>(g); ++j) prod *= omo[j];
        c2[0] = 1.0 / (prod * prod);
        size_t k = 0;
        for (size_t i = 0; i + 1 < count; ++i) {
            int p = std::countr_zero(i + 1);
            size_t j = static_cast<size_t>(g - 1 - p);
            k ^= size_t{1} << p;
            prod *= ((k >> p) & 1) ? omi[j] / omo[j] : omo[j] / omi[j];
            if ((i & 255) == 255) {
                prod = 1.0;
                for (size_t jj = 0; jj < static_cast<size_t>(g); ++jj)
                    prod *= ((k >> (static_cast<size_t>(g) - 1 - jj)) & 1) ? omi[jj] : omo[jj];
            }
            c2[k] = 1.0 / (prod * prod);
        }
    }

    std::vector<double> res2(count, 0.0);
    std::vector<C> fo1(static_cast<size_t>(g)), fi1(static_cast<size_t>(g)),
        fo2(static_cast<size_t>(g)), fi2(static_cast<size_t>(g)),
        r1(static_cast<size_t>(g)), r1i(static_cast<size_t>(g)),
        r2(static_cast<size_t>(g)), r2i(static_cast<size_t>(g));
    for (int t = 0; t <= half; ++t) {
        // Point 1 is xi_t in [-2pi, 0]; point 2 is xi_t + 2pi, i.e. w -> -w.
        double xi = -2.0 * std::numbers::pi + 4.0 * std::numbers::pi * t / (points - 1);
        double w = 2.0 * std::cos(xi / 2.0);
        double A1 = std::pow((2.0 + w) / 4.0, n);
        double A2 = std::pow((2.0 - w) / 4.0, n);
        C F1 = 1.0, F2 = 1.0;
        for (size_t j = 0; j < static_cast<size_t>(g); ++j) {
            fo1[j] = opo[j] - outer[j] * w;
            fi1[j] = opi[j] - inner[j] * w;
            fo2[j] = opo[j] + outer[j] * w;
            fi2[j] = opi[j] + inner[j] * w;
            r1[j] = fi1[j] / fo1[j];
            r1i[j] = fo1[j] / fi1[j];
            r2[j] = fi2[j] / fo2[j];
            r2i[j] = fo2[j] / fi2[j];
            F1 *= fo1[j];
            F2 *= fo2[j];
        }
        size_t k = 0;
        for (size_t i = 0;; ++i) {
            C G = c2[k] * (A1 * F1 + A2 * F2) - 1.0;
            double m = G.real() * G.real() + G.imag() * G.imag();
            if (m > res2[k]) res2[k] = m;
            if (i + 1 == count) break;
            int p = std::countr_zero(i + 1);
            size_t j = static_cast<size_t>(g - 1 - p);
            k ^= size_t{1} << p;
            if ((k >> p) & 1) {
                F1 *= r1[j];
                F2 *= r2[j];
            } else {
                F1 *= r1i[j];
                F2 *= r2i[j];
            }
            if ((i & 511) == 511) {
                F1 = F2 = 1.0;
                for (size_t jj = 0; jj < static_cast<size_t>(g); ++jj) {
                    bool bit = (k >> (static_cast<size_t>(g) - 1 - jj)) & 1;
                    F1 *= bit ? fi1[jj] : fo1[jj];
                    F2 *= bit ? fi2[jj] : fo2[jj];
                }
            }
        }
    }
    std::vector<double> out(count);
    for (size_t k = 0; k < count; ++k) out[k] = std::sqrt(res2[k]);
    return out;
}

} // namespace splinewave
