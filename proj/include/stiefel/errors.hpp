// Error types shared across the library. Everything derives from
// stiefel::Error so the CLI can map failures onto exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace stiefel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// Carries the leading term of the nonzero remainder in its message.
struct DivisionNotExactError : Error {
    using Error::Error;
};

struct ZeroPolynomialError : Error {
    using Error::Error;
};

// Buchberger exceeded the configured term ceiling; message reports the
// partial state (basis size, pending pairs, term count).
struct ResourceLimitError : Error {
    using Error::Error;
};

struct NoUnivariateElementError : Error {
    using Error::Error;
};

struct FactorDoesNotDivideError : Error {
    using Error::Error;
};

struct RelationNotFoundError : Error {
    using Error::Error;
};

struct VerificationFailureError : Error {
    using Error::Error;
};

}  // namespace stiefel
