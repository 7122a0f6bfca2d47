#ifndef MMINEIG_ERRORS_HPP
#define MMINEIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmineig {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad dimensions, zero diagonal, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// A pivot fell below the relative singularity threshold during elimination.
class SingularError : public Error {
public:
    using Error::Error;
};

/// Iterative method failed to converge; carries the last state for diagnosis.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_estimate, double residual)
        : Error(what), last_estimate_(last_estimate), residual_(residual) {}

    double last_estimate() const { return last_estimate_; }
    double residual() const { return residual_; }

private:
    double last_estimate_;
    double residual_;
};

} // namespace mmineig

#endif
