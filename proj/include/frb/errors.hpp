#pragma once

#include <stdexcept>
#include <string>

namespace frb {

// Numerical failure: a solver exhausted its iteration budget or lost its bracket.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Requested state lies in the region where no monetary equilibrium exists.
class NoEquilibriumError : public std::runtime_error {
public:
    explicit NoEquilibriumError(const std::string& what) : std::runtime_error(what) {}
};

// Policy violates the cycle-existence threshold.
class NoCycleError : public std::runtime_error {
public:
    explicit NoCycleError(const std::string& what) : std::runtime_error(what) {}
};

// Constructed candidate orbit does not close under the equilibrium map.
class CycleVerificationError : public std::runtime_error {
public:
    explicit CycleVerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Sufficient condition for a sunspot equilibrium fails.
class NoSunspotError : public std::runtime_error {
public:
    explicit NoSunspotError(const std::string& what) : std::runtime_error(what) {}
};

// Moment-matching solver failed; carries the last residuals.
class CalibrationError : public std::runtime_error {
public:
    CalibrationError(const std::string& what, double r1, double r2)
        : std::runtime_error(what), residual_zy(r1), residual_elasticity(r2) {}
    double residual_zy;
    double residual_elasticity;
};

}  // namespace frb
