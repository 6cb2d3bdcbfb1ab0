#pragma once

#include <stdexcept>
#include <string>

namespace conjsum {

// Function evaluation produced a non-finite value (NaN/inf) at a grid point.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double where)
        : std::runtime_error(what), where_(where) {}
    double where() const noexcept { return where_; }

private:
    double where_;
};

// A kernel was evaluated too close to one of its poles t = 2*l*pi/r.
class SingularityError : public std::domain_error {
public:
    SingularityError(const std::string& what, double nearest)
        : std::domain_error(what), nearest_(nearest) {}
    // Location of the offending pole.
    double nearest_singularity() const noexcept { return nearest_; }

private:
    double nearest_;
};

// An iterative limit (epsilon refinement, improper integral) failed to settle.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Too few usable samples for a requested fit.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace conjsum
