#include "frb/calibration.hpp"

#include <cmath>

#include "frb/errors.hpp"

namespace frb {

namespace {

// q, z, b and their i-derivatives from the closed forms; q solves
// u'(q) = 1 + i chi / (alpha [1 + i(1-chi)]).
MomentDerivatives pieces(const ModelParams& p, const Policy& pol) {
    Mechanism mech(p);
    double i = pol.i, chi = pol.chi;
    double d = 1.0 + (1.0 - chi) * i;
    double rhs = 1.0 + i * chi / (p.alpha * d);
    double q = mech.q_from_lambda(rhs - 1.0);
    double drhs_di = chi / (p.alpha * d * d);
    double dq_di = drhs_di / mech.u_second(q);

    MomentDerivatives m;
    m.q = q;
    m.dq_di = dq_di;
    if (p.mu == 0.0) {
        m.b = 0.0;
        m.db_di = 0.0;
        m.z = q / d;
        m.dz_di = dq_di / d - q * (1.0 - chi) / (d * d);
    } else {
        // region-1 debt limit b = N/Den, N = (mu sigma alpha/rho) S(q) + (i mu chi/rho) q,
        // Den = 1 + i mu chi / rho
        double rho = p.rho();
        double c1 = p.mu * p.sigma * p.alpha / rho;
        double c2 = p.mu * chi / rho;
        double N = c1 * mech.S(q) + i * c2 * q;
        double Den = 1.0 + i * c2;
        double dN = c1 * (mech.u_prime(q) - 1.0) * dq_di + c2 * (q + i * dq_di);
        m.b = N / Den;
        m.db_di = dN / Den - N * c2 / (Den * Den);
        m.z = (q - m.b) / d;
        m.dz_di = (dq_di - m.db_di) / d - (q - m.b) * (1.0 - chi) / (d * d);
    }
    double y = p.sigma * p.alpha * q + p.B;
    m.dlogZ_di = m.dz_di / m.z - p.sigma * p.alpha * m.dq_di / y;
    return m;
}

}  // namespace

Moments moments(const ModelParams& p, const Policy& pol) {
    MomentDerivatives m = pieces(p, pol);
    double y = p.sigma * p.alpha * m.q + p.B;
    return {m.z / y, pol.i * m.dlogZ_di};
}

MomentDerivatives moment_derivatives(const ModelParams& p, const Policy& pol) {
    return pieces(p, pol);
}

CalibrationResult calibrate(const CalibrationTargets& targets, const ModelParams& fixed,
                            const Policy& pol, double C0, double eta0) {
    double x0 = std::log(C0), x1 = std::log(eta0);
    double r0 = 0.0, r1 = 0.0;
    auto residual = [&](double lc, double le, double& out0, double& out1) {
        ModelParams p = fixed;
        p.C = std::exp(lc);
        p.eta = std::exp(le);
        Moments m = moments(p, pol);
        out0 = m.Z - targets.zy_ratio;
        out1 = m.elasticity - targets.elasticity;
    };
    const int budget = 200;
    for (int it = 0; it < budget; ++it) {
        residual(x0, x1, r0, r1);
        double norm = std::max(std::abs(r0), std::abs(r1));
        if (norm < 1e-10) return {std::exp(x0), std::exp(x1), it};
        // forward-difference Jacobian in log space
        double h = 1e-7;
        double a0, a1, b0, b1;
        residual(x0 + h, x1, a0, a1);
        residual(x0, x1 + h, b0, b1);
        double J00 = (a0 - r0) / h, J01 = (b0 - r0) / h;
        double J10 = (a1 - r1) / h, J11 = (b1 - r1) / h;
        double det = J00 * J11 - J01 * J10;
        if (std::abs(det) < 1e-18 || !std::isfinite(det)) {
            throw CalibrationError("calibrate: singular Jacobian", r0, r1);
        }
        double s0 = -(J11 * r0 - J01 * r1) / det;
        double s1 = -(-J10 * r0 + J00 * r1) / det;
        double cap = std::max(std::abs(s0), std::abs(s1));
        if (cap > 0.5) {  // step cap in log-parameter space
            s0 *= 0.5 / cap;
            s1 *= 0.5 / cap;
        }
        // backtracking damping
        double t = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < 30; ++bt) {
            double n0, n1;
            try {
                residual(x0 + t * s0, x1 + t * s1, n0, n1);
            } catch (const std::exception&) {
                t *= 0.5;
                continue;
            }
            if (std::isfinite(n0) && std::isfinite(n1) &&
                std::max(std::abs(n0), std::abs(n1)) < norm) {
                x0 += t * s0;
                x1 += t * s1;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            throw CalibrationError("calibrate: line search stalled, targets likely infeasible",
                                   r0, r1);
        }
    }
    residual(x0, x1, r0, r1);
    if (std::max(std::abs(r0), std::abs(r1)) < 1e-8) {
        return {std::exp(x0), std::exp(x1), budget};
    }
    throw CalibrationError("calibrate: iteration budget exhausted", r0, r1);
}

}  // namespace frb
