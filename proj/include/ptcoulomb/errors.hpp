#pragma once

#include <stdexcept>
#include <string>

namespace ptc {

// Argument hits a pole of the gamma function (non-positive integer).
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Argument outside the domain an operation supports (2F1 with c a
// non-positive integer, residual grid crossing x = 0, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Adaptive quadrature ran out of its refinement budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_estimate(previous), last_estimate(last) {}

    double previous_estimate;
    double last_estimate;
};

// Shooting bracket does not straddle a sign change of the miss function.
class BracketError : public std::runtime_error {
public:
    explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

// Outward integration did not settle under step refinement.
class StepSizeError : public std::runtime_error {
public:
    explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ptc
