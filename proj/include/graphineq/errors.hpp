#pragma once

#include <stdexcept>
#include <string>

namespace graphineq {

/// Evaluation of a lazy vertex function outside its declared window.
/// Truncation effects must be explicit, never silent.
class WindowViolation : public std::domain_error {
public:
    explicit WindowViolation(const std::string& what) : std::domain_error(what) {}
};

/// A value violated a domain requirement (nonpositive weight, u <= 0,
/// negative superharmonic defect, parameter outside its interval, ...).
class DomainViolation : public std::domain_error {
public:
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

/// A finite system turned out not to be positive definite, i.e. the
/// operator is not positive on the requested set.
class PositivityError : public std::runtime_error {
public:
    explicit PositivityError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-domain run configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (signals a bug, not bad input).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace graphineq
