#pragma once

#include <stdexcept>
#include <string>

namespace clucmp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or empty input (e.g. an empty label sequence).
struct InvalidInputError : Error {
    using Error::Error;
};

/// Two clusterings (or a clustering and a feature matrix) disagree on n.
struct DimensionError : Error {
    using Error::Error;
};

/// A caller-side precondition was violated (k too small, subset out of range, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// The measure has no defined value on this input (e.g. Rand index at n = 1).
struct UndefinedMeasureError : Error {
    using Error::Error;
};

/// No component decomposition exists for the requested measure.
struct UnsupportedDecompositionError : Error {
    using Error::Error;
};

/// A data file could not be parsed.
struct FileFormatError : Error {
    using Error::Error;
};

/// Inconsistent or incomplete run configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace clucmp
