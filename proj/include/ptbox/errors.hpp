#pragma once

#include <stdexcept>
#include <string>

namespace ptbox {

/// Wall law evaluated where the box has collapsed (L <= 0) or is otherwise unusable.
class TrajectoryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid configuration. `key()` is the dotted path of the offending entry, e.g. "physics.alpha".
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string key, const std::string& message)
        : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Time integration aborted (non-finite state, step-size underflow).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quadrature did not converge under point doubling.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ptbox
