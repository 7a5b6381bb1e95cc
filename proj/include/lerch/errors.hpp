#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "lerch/domain_status.hpp"

namespace lerch {

/// A parameter lies outside the region where the requested formula holds.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
    DomainError(const std::string& what, DomainStatus status)
        : std::runtime_error(what), status_(std::move(status)) {}

    const DomainStatus& status() const noexcept { return status_; }

private:
    DomainStatus status_;
};

/// Evaluation hit a pole of a kernel (cot, coth, gamma).
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative expansion or a quadrature did not reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The integrand produced a non-finite value at some abscissa.
class IntegrandError : public NumericalError {
public:
    IntegrandError(const std::string& what, double abscissa)
        : NumericalError(what), abscissa_(abscissa) {}

    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// Direct summation does not converge (or has no computable tail bound) here.
/// This is a limitation of the reference sum, not of any formula.
class OracleUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lerch
