#pragma once

#include <stdexcept>
#include <string>

namespace rfso {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation at a pole of the gamma function.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A value grew beyond the representable range.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// No vertical Mellin-Barnes contour separates the pole families.
struct ContourError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative scheme exhausted its budget before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed scenario file (unknown key, bad value, missing field).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rfso
