// Walks the full construction for one order (default 3): the exact Q
// polynomial, its cosine-series coefficients, the symbol roots grouped into
// reciprocal pairs, the factor coefficients a_i on the default branch, the
// refinement coefficients p_k, the orthonormal filter pair, and the
// verification summary.

#include "splinewave/splinewave.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace splinewave;

int main(int argc, char** argv) {
    int n = 3;
    if (argc > 1) n = std::atoi(argv[1]);
    if (n < 1 || n > kMaxOrder) {
        std::fprintf(stderr, "usage: %s [order]   (order in 1..%d)\n", argv[0], kMaxOrder);
        return 64;
    }

    std::printf("construction walk-through, order n = %d\n\n", n);

    QPolynomial q = lorentz_q(n);
    std::printf("Q_%d(x), exact coefficients (ascending):\n  ", n);
    for (int k = 0; k <= q.poly.degree(); ++k)
        std::printf("%s%s", k ? "  " : "", fraction_string(q.poly.coeff(k)).c_str());
    std::printf("\n  Q(1) = %s, Q(0) = %s\n\n",
                fraction_string(poly_eval_exact(q.poly, Rational(1))).c_str(),
                fraction_string(poly_eval_exact(q.poly, Rational(0))).c_str());

    LaurentSymbol L = laurent_symbol(q);
    std::printf("cosine series of the symbol, c_0..c_%d (exact):\n  ", n - 1);
    for (const auto& c : L.c_exact) std::printf("%s  ", fraction_string(c).c_str());
    std::printf("\n\n");

    FactorSolution s = spectral_factor(L);
    if (n >= 2) {
        RootSet rs = symbol_roots(L);
        std::printf("reciprocal root pairs of z^{%d} L(z):\n", n - 1);
        for (size_t j = 0; j < rs.pairs.size(); ++j) {
            const auto& pr = rs.pairs[j];
            std::printf("  pair %zu: outer %.12Lg %+.12Lgi   inner %.12Lg %+.12Lgi   selected: %s\n",
                        j, pr.outer.real(), pr.outer.imag(), pr.inner.real(), pr.inner.imag(),
                        s.bits[j] == 0 ? "outer" : "inner");
        }
        std::printf("\n");
    }

    std::printf("factor coefficients on branch \"%s\" (S(z) = a_1 z + ... + a_%d z^%d):\n",
                s.branch.c_str(), n, n);
    for (size_t i = 0; i < s.a_real.size(); ++i)
        std::printf("  a_%zu = %+.12f\n", i + 1, s.a_real[i]);
    std::printf("  sum a_i   = %.15Lf\n", solution_sum_a(s).real());
    std::printf("  sum a_i^2 = %.15Lf   (c_0 = %.15f)\n\n", solution_sum_a_sq(s).real(), L.c[0]);

    RefinementMask m = refinement_mask(n, s);
    std::printf("refinement coefficients p_k, k = %d..%d  (phi(x) = sum p_k phi(2x - k)):\n",
                m.k_min, m.k_max);
    for (size_t j = 0; j < m.p.size(); ++j)
        std::printf("  p_%d = %+.12f\n", m.k_min + static_cast<int>(j), m.p[j]);
    std::printf("\n");

    OrthFilterPair fp = make_filter_pair(m);
    std::printf("orthonormal filters (offset %d):\n  h:", fp.offset);
    for (double v : fp.h) std::printf(" %+.12f", v);
    std::printf("\n  g:");
    for (double v : fp.g) std::printf(" %+.12f", v);
    std::printf("\n\n");

    VerificationReport r = run_verification(n);
    std::printf("verification summary:\n");
    for (const auto& c : r.checks)
        std::printf("  %-28s %s   value %.3e\n", c.name.c_str(), c.pass ? "pass" : "FAIL", c.value);
    std::printf("overall: %s\n", r.overall ? "pass" : "FAIL");
    if (!r.accuracy_warning.empty()) std::printf("note: %s\n", r.accuracy_warning.c_str());
    return r.overall ? 0 : 1;
}
