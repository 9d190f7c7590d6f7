#pragma once

#include <stdexcept>
#include <string>

namespace ugnsr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exactly-zero field element or rational function.
struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// A truncated series does not carry enough orders to answer the question;
/// the caller is expected to retry with a larger truncation order.
struct IncreaseTruncationError : Error {
    explicit IncreaseTruncationError(int have)
        : Error("series truncation order " + std::to_string(have) + " is insufficient"),
          truncation(have) {}
    int truncation;
};

/// hbar -> 0 limit requested of a series with a pole.
struct PoleError : Error {
    explicit PoleError(int order, const std::string& context = {})
        : Error("limit does not exist: pole of order " + std::to_string(order) +
                (context.empty() ? "" : " in " + context)),
          pole_order(order) {}
    int pole_order;
};

/// Request exceeds a configured size bound (degree caps and the like).
struct CapacityError : Error {
    using Error::Error;
};

/// A documented precondition was violated by the input
/// (e.g. a difference-operator division that fails to be exact).
struct ContractViolation : Error {
    using Error::Error;
};

/// Structural assumption of the construction failed
/// (e.g. a singular-vector kernel of dimension != 1 at symbolic parameters).
struct StructuralError : Error {
    using Error::Error;
};

/// Degenerate parameter case that the operation does not support.
struct UnsupportedCaseError : Error {
    using Error::Error;
};

} // namespace ugnsr
