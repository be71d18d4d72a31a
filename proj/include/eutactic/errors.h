#ifndef EUTACTIC_ERRORS_H
#define EUTACTIC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eutactic {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// An exact-backend value met a float-backend value in one computation.
struct BackendMismatch : Error {
    using Error::Error;
};

/// Precondition on a value failed (zero inverse, index out of range, bad priors...).
struct DomainError : Error {
    using Error::Error;
};

/// The exact backend cannot represent the requested quantity inside Q(sqrt 2).
struct NotRepresentable : DomainError {
    using DomainError::DomainError;
};

struct NotOrthonormal : Error {
    using Error::Error;
};

struct NotOrthogonal : Error {
    using Error::Error;
};

struct NotParseval : Error {
    using Error::Error;
};

/// Share projectors do not partition the identity, so coherent reconstruction is impossible.
struct IncompleteShares : Error {
    using Error::Error;
};

struct AmbiguousDecode : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line(line),
          column(column) {
    }
    std::size_t line;
    std::size_t column;
};

}  // namespace eutactic

#endif
