// Builds the order-4 orthonormal filter pair, runs a seeded random signal of
// length 512 through a three-level periodic analysis/synthesis round trip, and
// prints the reconstruction error and energy budget.

#include "splinewave/splinewave.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

using namespace splinewave;

int main() {
    const int n = 4;
    const size_t length = 512;
    const int levels = 3;
    const unsigned long long seed = 20250819;

    FactorSolution s = spectral_factor(laurent_symbol(lorentz_q(n)));
    OrthFilterPair fp = make_filter_pair(refinement_mask(n, s));
    std::printf("order %d filter pair, %zu taps, offset %d\n", n, fp.h.size(), fp.offset);

    std::mt19937_64 rng(seed);
    std::vector<double> x(length);
    for (auto& v : x) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v = 2.0 * u - 1.0;
    }

    Pyramid pyr = dwt_periodic(x, fp, levels);
    std::printf("analysis: length %zu -> ", length);
    for (const auto& d : pyr.details) std::printf("detail %zu, ", d.size());
    std::printf("approx %zu (%d levels)\n", pyr.approx.size(), pyr.levels);

    std::vector<double> back = idwt_periodic(pyr, fp);

    double max_abs = 0.0, sup = 0.0;
    long double in_energy = 0.0L, out_energy = 0.0L;
    for (size_t i = 0; i < length; ++i) {
        max_abs = std::max(max_abs, std::fabs(back[i] - x[i]));
        sup = std::max(sup, std::fabs(x[i]));
        in_energy += static_cast<long double>(x[i]) * x[i];
    }
    for (double v : pyr.approx) out_energy += static_cast<long double>(v) * v;
    for (const auto& d : pyr.details)
        for (double v : d) out_energy += static_cast<long double>(v) * v;

    double parseval = static_cast<double>(std::fabs(out_energy - in_energy) / in_energy);
    std::printf("max abs reconstruction error: %.3e\n", max_abs);
    std::printf("max rel reconstruction error: %.3e\n", max_abs / sup);
    std::printf("relative energy deviation:    %.3e\n", parseval);

    bool ok = max_abs / sup <= 1e-10 && parseval <= 1e-10;
    std::printf("round trip: %s\n", ok ? "pass" : "FAIL");
    return ok ? 0 : 1;
}
