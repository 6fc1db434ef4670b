#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace microbot {

/// Bad argument value (non-positive radius, angle out of range, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quadrature, series or linear solve failed to meet its tolerance.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input valid in general but not handled by this routine.
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Object used before a required preparation step (e.g. normalization).
class InvalidState : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Mesh or body geometry is degenerate.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Constrained search found no admissible design.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration file or command-line value.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Compact rendering of a double for error messages.
inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw InvalidParameter(std::string(name) + " must be positive, got " + fmt(value));
    }
}

inline void require_nonnegative(double value, const char* name) {
    if (!(value >= 0.0)) {
        throw InvalidParameter(std::string(name) + " must be non-negative, got " + fmt(value));
    }
}

}  // namespace detail
}  // namespace microbot
