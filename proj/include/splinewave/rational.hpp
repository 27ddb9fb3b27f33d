#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace splinewave {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored reduced with a positive denominator
// (boost keeps the canonical form).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

// "num/den", or just "num" when the denominator is 1.
inline std::string fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Binomial coefficient via the Pascal-triangle recurrence in big integers.
inline BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
    return row[static_cast<size_t>(k)];
}

inline BigInt pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

} // namespace splinewave
