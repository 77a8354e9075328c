#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

/// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (maps to CLI exit 2).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument hits a pole of a Gamma factor or a rational factor.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical contract failure (maps to CLI exit 3).
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

class ToleranceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Hypergeometric series asked to run outside its convergence window.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class InsufficientDecayError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StripTooNarrowError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class TailNotResolvedError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class GridMismatchError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace sl2
