#pragma once

#include <stdexcept>
#include <string>

namespace droop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid link configuration or command-line usage (CLI exit code 1).
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
    explicit ConfigError(const std::string& what) : Error(what) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Argument outside the mathematical domain of an operation (non-finite
/// input, non-positive power, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The first-order redistribution model is invalid at the requested power:
/// alpha_nl * P^2 + gawbs_loss >= 1.
class DroopDomainError : public DomainError {
public:
    DroopDomainError(double power_mw, double redistributed_fraction);

    double power_mw() const noexcept { return power_mw_; }
    double redistributed_fraction() const noexcept { return fraction_; }

private:
    double power_mw_;
    double fraction_;
};

/// SNR is monotone in power (no nonlinearity), so no finite optimum exists.
class NoOptimumError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iterative solver failed to converge.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double last_iterate, double residual)
        : Error(what), last_iterate_(last_iterate), residual_(residual) {}

    double last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    double last_iterate_;
    double residual_;
};

}  // namespace droop
