#pragma once

#include "frb/params.hpp"

namespace frb {

struct CalibrationTargets {
    double zy_ratio;    // average real-balance-to-output ratio
    double elasticity;  // elasticity of z/y with respect to i (negative)
};

struct Moments {
    double Z;           // z / (sigma alpha q + B)
    double elasticity;  // i * dlog(Z)/di
};

// Closed-form moments; mu = 0 uses the money-only formulas, mu > 0 adds the
// region-1 debt limit and its analytic derivative.
Moments moments(const ModelParams& p, const Policy& pol);

// Analytic pieces exposed for derivative cross-checks.
struct MomentDerivatives {
    double q, dq_di;
    double z, dz_di;
    double b, db_di;
    double dlogZ_di;
};
MomentDerivatives moment_derivatives(const ModelParams& p, const Policy& pol);

// Damped Newton in log(C, eta) matching (Z, elasticity) to the targets.
struct CalibrationResult {
    double C;
    double eta;
    int iterations;
};
CalibrationResult calibrate(const CalibrationTargets& targets, const ModelParams& fixed,
                            const Policy& pol, double C0 = 1.0, double eta0 = 0.1);

}  // namespace frb
