#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dunkl {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result would overflow the double range.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// A quadrature or series failed to reach its tolerance. Carries the best
/// estimate available when the budget ran out.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, std::complex<double> estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    std::complex<double> estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    std::complex<double> estimate_;
    double error_bound_;
};

}  // namespace dunkl
