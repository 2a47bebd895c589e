#pragma once

#include <stdexcept>
#include <string>

namespace fracq {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature exhausted its evaluation budget before reaching tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sound inequality variant reported a ratio above 1 beyond tolerance.
struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fracq
