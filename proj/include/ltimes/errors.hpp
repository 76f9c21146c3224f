#pragma once

#include <stdexcept>
#include <string>

namespace ltimes {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two series with different truncation degrees were combined.
struct DegreeMismatchError : Error {
    using Error::Error;
};

/// A denominator whose constant coefficient is not 1.
struct NotAUnitError : Error {
    using Error::Error;
};

/// A series violates the coefficient-sign shape required by an operation
/// (e.g. a positive tail coefficient in a denominator, or a negative
/// coefficient in a Betti profile).
struct ShapeError : Error {
    using Error::Error;
};

/// A model constructor was given data violating one of its invariants.
struct ValidationError : Error {
    using Error::Error;
};

/// A module was combined with a ring it is not defined over.
struct RingMismatchError : Error {
    using Error::Error;
};

/// An operation needs coefficients beyond the supplied truncation degree.
struct InsufficientTruncationError : Error {
    using Error::Error;
};

/// A checker was invoked without its theorem's hypotheses asserted.
struct HypothesisUnmetError : Error {
    using Error::Error;
};

/// Two routes that must agree disagreed, or a quantity that must be an
/// integer was not. Signals a bug in this library, never a user error.
struct InternalConsistencyError : Error {
    using Error::Error;
};

/// A workspace document referenced a name that does not resolve.
struct ReferenceError : Error {
    using Error::Error;
};

/// A workspace file could not be read or decoded.
struct ParseError : Error {
    using Error::Error;
};

} // namespace ltimes
