#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvesing {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid mathematical operation (division by zero, zero polynomial, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed textual input; carries a 0-based position into the source text.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

// A truncated computation could not certify its result.
struct PrecisionError : Error {
    using Error::Error;
};

// The germ is not reduced / the singularity is not isolated.
struct NonIsolatedError : Error {
    using Error::Error;
};

// Step-bound or cap exceeded; indicates an implementation bug or a
// configuration far below the problem size.
struct WatchdogError : Error {
    using Error::Error;
};

// An internal invariant failed; a bug, never a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace curvesing
