#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicx {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion (or a normalization that requires inversion) hit a zero divisor.
class NullConeError : public Error {
public:
    using Error::Error;
};

/// Two vectors (or a functional and a vector) have different truncation orders.
class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_(lhs),
          rhs_(rhs) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

/// Orthonormalization found a ket whose k-th projection lies in the span of
/// its predecessors; the normalization scalar would be on the null cone.
class DependentComponent : public Error {
public:
    DependentComponent(int component, std::size_t index)
        : Error("dependent component: projection " + std::to_string(component) +
                " of ket " + std::to_string(index) + " is in the span of its predecessors"),
          component_(component),
          index_(index) {}

    int component() const noexcept { return component_; }
    std::size_t index() const noexcept { return index_; }

private:
    int component_;
    std::size_t index_;
};

/// The hyperbolic parameter xi is not strictly positive in both idempotent components.
class InvalidXi : public Error {
public:
    using Error::Error;
};

/// A quantum-number or truncation guard was exceeded.
class IndexTooLarge : public Error {
public:
    IndexTooLarge(int value, int limit)
        : Error("index " + std::to_string(value) + " exceeds limit " + std::to_string(limit)),
          value_(value),
          limit_(limit) {}

    int value() const noexcept { return value_; }
    int limit() const noexcept { return limit_; }

private:
    int value_;
    int limit_;
};

/// An operation precondition was violated by the caller.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace bicx
