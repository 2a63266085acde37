#pragma once

#include <stdexcept>
#include <string>

namespace hoaf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix entries do not satisfy ad - bc = 1.
struct DeterminantError : Error {
    using Error::Error;
};

/// A point or path left the upper half-plane.
struct DomainError : Error {
    using Error::Error;
};

/// Path concatenation with mismatched junction vertices.
struct EndpointMismatch : Error {
    using Error::Error;
};

/// Fundamental-domain reduction failed to terminate.
struct ReductionError : Error {
    using Error::Error;
};

/// A requested tolerance cannot be met (series tail or quadrature refinement).
struct PrecisionError : Error {
    using Error::Error;
};

/// Homotopy-class evaluation requested for a mixed word without a path policy.
struct MixedWordError : Error {
    using Error::Error;
};

/// Bigraded bookkeeping violated (p + q != m + 1, or inhomogeneous input).
struct GradingError : Error {
    using Error::Error;
};

/// An order certificate found a residual above tolerance.
struct CertificateFailure : Error {
    using Error::Error;
};

struct SingularPeriodMatrix : Error {
    using Error::Error;
};

} // namespace hoaf
