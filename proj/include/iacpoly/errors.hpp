#pragma once

#include <stdexcept>
#include <string>

namespace iacpoly {

// Input could not be read (bad literal, malformed file, unknown event spec).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Shapes that do not fit together (non-square matrix, mixed ambient dimensions).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Arithmetic or parameter domain violations (zero denominator, lambda outside [0,1]).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Geometric preconditions that failed: unbounded input, missing equality to eliminate.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundedError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// A lattice count or interpolation would need more work than the configured ceiling.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, unsigned long long required_dilation)
        : std::runtime_error(what), required_dilation_(required_dilation) {}

    [[nodiscard]] unsigned long long required_dilation() const noexcept { return required_dilation_; }

private:
    unsigned long long required_dilation_;
};

// Fitted quasipolynomial disagrees with a reserved validation count.
class PeriodTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant breach: the computation produced something impossible.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace iacpoly
