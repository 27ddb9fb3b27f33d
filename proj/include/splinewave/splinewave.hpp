#pragma once

// Spline-type orthogonal scaling functions: exact Lorentz/Bezout polynomial
// layer, spectral factorization of the symbol, refinement masks, cascade
// approximation of phi, and orthonormal periodic filter banks.

#include "errors.hpp"    // IWYU pragma: export
#include "rational.hpp"  // IWYU pragma: export
#include "poly.hpp"      // IWYU pragma: export
#include "symbol.hpp"    // IWYU pragma: export
#include "aberth.hpp"    // IWYU pragma: export
#include "factor.hpp"    // IWYU pragma: export
#include "scaling.hpp"   // IWYU pragma: export
#include "filterbank.hpp" // IWYU pragma: export
#include "verify.hpp"    // IWYU pragma: export
