#pragma once

#include <stdexcept>
#include <string>

namespace splinewave {

// Root iteration exhausted its budget without meeting tolerance.
struct ConvergenceFailure : std::runtime_error {
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

// Roots could not be matched into reciprocal pairs; signals inaccurate roots.
struct PairingFailure : std::runtime_error {
    explicit PairingFailure(const std::string& what) : std::runtime_error(what) {}
};

// A branch selection that is not closed under conjugation (no real coefficients).
struct BranchInvalid : std::invalid_argument {
    explicit BranchInvalid(const std::string& what) : std::invalid_argument(what) {}
};

// Signal length incompatible with the requested transform.
struct LengthError : std::invalid_argument {
    explicit LengthError(const std::string& what) : std::invalid_argument(what) {}
};

// Coefficient pyramid with inconsistent shape.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Mask rejected by the discrete-orthonormality gate.
struct NonOrthonormalMask : std::invalid_argument {
    explicit NonOrthonormalMask(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace splinewave
