#pragma once

#include <stdexcept>
#include <string>

namespace whichway {

// Invalid or inconsistent run configuration (bad field value, missing column).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature failed its self-convergence gate, or a field came out non-finite.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failure (unreadable input, unwritable output).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace whichway
