#pragma once

#include <stdexcept>
#include <string>

namespace moyallax {

/// Two values with incompatible truncation windows were combined where the
/// operation requires a shared window (pseudo-differential composition).
class TruncationMismatch : public std::invalid_argument {
public:
    explicit TruncationMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check failed: something the construction guarantees
/// (e.g. a Lax commutator being an order-0 operator) did not hold. The CLI
/// maps this to exit code 2.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is not in the image of the operator being inverted (d/dx inversion,
/// variational-gradient reconstruction).
class NotExactDerivative : public std::domain_error {
public:
    explicit NotExactDerivative(const std::string& what) : std::domain_error(what) {}
};

/// Thrown from cancellation checkpoints once a cancellation was requested.
class OperationCancelled : public std::runtime_error {
public:
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

}  // namespace moyallax
