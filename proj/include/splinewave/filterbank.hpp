#pragma once

#include "scaling.hpp"

#include <cmath>
#include <vector>

namespace splinewave {

// Orthonormal analysis pair: lowpass h_k = p_k / sqrt(2), highpass
// g_k = (-1)^k h_{K-k} with K = k_min + k_max (alternating flip over the
// support). Both are indexed k = offset..offset+len-1 with offset = k_min.
struct OrthFilterPair {
    int offset = 0;
    std::vector<double> h;
    std::vector<double> g;
};

inline OrthFilterPair make_filter_pair(const RefinementMask& mask) {
    double residual = mask_orthonormality_residual(mask);
    if (residual > 1e-9)
        throw NonOrthonormalMask("make_filter_pair: mask fails discrete orthonormality (residual " +
                                 std::to_string(residual) + " > 1e-9)");
    OrthFilterPair fp;
    fp.offset = mask.k_min;
    const size_t len = mask.p.size();
    fp.h.resize(len);
    fp.g.resize(len);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (size_t j = 0; j < len; ++j) fp.h[j] = mask.p[j] * inv_sqrt2;
    // k = offset + j, K - k = offset + (len - 1 - j); sign (-1)^k.
    for (size_t j = 0; j < len; ++j) {
        int k = mask.k_min + static_cast<int>(j);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        fp.g[j] = sign * fp.h[len - 1 - j];
    }
    return fp;
}

// Decimated periodic transform coefficients; details[0] is the finest level.
struct Pyramid {
    int levels = 0;
    size_t signal_len = 0;
    std::vector<std::vector<double>> details;
    std::vector<double> approx;
};

namespace detail {

inline void analyze_periodic(const std::vector<double>& x, const OrthFilterPair& fp,
                             std::vector<double>& approx, std::vector<double>& det) {
    const size_t N = x.size();
    const size_t half = N / 2;
    approx.assign(half, 0.0);
    det.assign(half, 0.0);
    for (size_t i = 0; i < half; ++i) {
        double a = 0.0, d = 0.0;
        for (size_t j = 0; j < fp.h.size(); ++j) {
            size_t src = (2 * i + static_cast<size_t>(fp.offset) + j) % N;
            a += fp.h[j] * x[src];
            d += fp.g[j] * x[src];
        }
        approx[i] = a;
        det[i] = d;
    }
}

inline std::vector<double> synthesize_periodic(const std::vector<double>& approx,
                                               const std::vector<double>& det,
                                               const OrthFilterPair& fp) {
    const size_t N = 2 * approx.size();
    std::vector<double> x(N, 0.0);
    for (size_t i = 0; i < approx.size(); ++i) {
        for (size_t j = 0; j < fp.h.size(); ++j) {
            size_t dst = (2 * i + static_cast<size_t>(fp.offset) + j) % N;
            x[dst] += fp.h[j] * approx[i] + fp.g[j] * det[i];
        }
    }
    return x;
}

} // namespace detail

// a_i = sum_k h_k x_{(2i+k) mod N}, d_i = sum_k g_k x_{(2i+k) mod N}, repeated
// on the approximation. Periodic extension keeps the transform orthogonal in
// finite dimensions, so every level requires an even length >= filter length.
inline Pyramid dwt_periodic(const std::vector<double>& signal, const OrthFilterPair& fp,
                            int levels) {
    if (levels < 1) throw std::invalid_argument("dwt_periodic: levels must be >= 1");
    Pyramid pyr;
    pyr.levels = levels;
    pyr.signal_len = signal.size();
    std::vector<double> current = signal;
    for (int lvl = 0; lvl < levels; ++lvl) {
        if (current.size() % 2 != 0 || current.size() < fp.h.size())
            throw LengthError("dwt_periodic: level " + std::to_string(lvl) +
                              " length " + std::to_string(current.size()) +
                              " must be even and >= filter length " + std::to_string(fp.h.size()));
        std::vector<double> approx, det;
        detail::analyze_periodic(current, fp, approx, det);
        pyr.details.push_back(std::move(det));
        current = std::move(approx);
    }
    pyr.approx = std::move(current);
    return pyr;
}

inline std::vector<double> idwt_periodic(const Pyramid& pyr, const OrthFilterPair& fp) {
    if (pyr.levels < 1 || static_cast<size_t>(pyr.levels) != pyr.details.size())
        throw ShapeError("idwt_periodic: level count does not match detail count");
    size_t expect = pyr.signal_len;
    for (int lvl = 0; lvl < pyr.levels; ++lvl) {
        expect /= 2;
        if (pyr.details[static_cast<size_t>(lvl)].size() != expect)
            throw ShapeError("idwt_periodic: detail level " + std::to_string(lvl) +
                             " has wrong length");
    }
    if (pyr.approx.size() != expect)
        throw ShapeError("idwt_periodic: approximation has wrong length");
    std::vector<double> current = pyr.approx;
    for (int lvl = pyr.levels - 1; lvl >= 0; --lvl)
        current = detail::synthesize_periodic(current, pyr.details[static_cast<size_t>(lvl)], fp);
    return current;
}

} // namespace splinewave
