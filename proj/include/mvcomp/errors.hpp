#pragma once

#include <stdexcept>
#include <string>

namespace mvcomp {

// Base class for every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input bytes (CSV/JSON); the message carries line or entry context.
class ParseError : public Error {
    using Error::Error;
};

// Structurally readable input that violates a table invariant
// (duplicate or missing cells, bad counts, missing algorithms).
class ValidationError : public Error {
    using Error::Error;
};

// A performance measure whose denominator is zero for the given counts.
class UndefinedMeasureError : public Error {
    using Error::Error;
};

// Zero-variance data on which a test statistic would divide by zero.
class DegenerateVarianceError : public Error {
    using Error::Error;
};

// Covariance matrix is not positive definite within tolerance.
// pivot() is the index of the first non-positive Cholesky pivot.
class SingularCovarianceError : public Error {
public:
    SingularCovarianceError(const std::string& what, int pivot)
        : Error(what), pivot_(pivot) {}

    int pivot() const { return pivot_; }

private:
    int pivot_;
};

// Within-group scatter matrix E is singular or numerically zero.
class SingularScatterError : public Error {
    using Error::Error;
};

}  // namespace mvcomp
