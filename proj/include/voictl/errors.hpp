#pragma once

#include <stdexcept>
#include <string>

namespace voictl {

/// Bad user input: malformed config, inconsistent dimensions, weights
/// outside their admissible range. The message names the offending field.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ill-posed numerics discovered at run time (singular covariance,
/// failed factorization).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace voictl
