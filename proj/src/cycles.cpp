#include "frb/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frb/errors.hpp"
#include "frb/model_core.hpp"
#include "frb/roots.hpp"
#include "frb/steady_state.hpp"

namespace frb {

namespace {

constexpr double kOrbitTol = 1e-8;
constexpr double kBoundaryTol = 1e-10;

// Threshold for an n-period cycle with one point below p* and the rest on the
// linear branch.
double cycle_threshold(int n, const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    if (!(pol.i > 0.0)) {
        throw std::domain_error("cycle threshold undefined at i = 0");
    }
    double g = std::pow(1.0 + pol.i, n);
    double aL = p.alpha * liquidity_premium_of_balance(mech.p_star() / (1.0 + pol.i), mech);
    return g * aL / ((g - 1.0) * (1.0 + aL));
}

// The proofs' semi-analytic candidate: solve the threshold relation for pbar_1,
// recover (i_d1, z_1), and stack the linear-branch points above.
CyclePoints cycle_candidate(int n, const ModelParams& p, const Policy& pol,
                            const Mechanism& mech) {
    double g = std::pow(1.0 + pol.i, n);
    double Dn = g - 1.0;
    double aL = pol.chi * Dn / (g - pol.chi * Dn);
    double pbar1 = mech.v(mech.q_from_lambda(aL / p.alpha));
    double i_d1 = g / (1.0 + aL) - 1.0;
    double z1 = pbar1 / (1.0 + i_d1);
    CyclePoints c;
    c.period = n;
    c.points.resize(n);
    for (int k = 0; k < n; ++k) c.points[k] = z1 * std::pow(1.0 + pol.i, k);
    return c;
}

void verify_orbit(CyclePoints& c, const ModelParams& p, const Policy& pol,
                  const Mechanism& mech) {
    int n = c.period;
    c.residuals.resize(n);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double mapped = eq_map(c.points[(k + 1) % n], p, pol, mech);
        c.residuals[k] = std::abs(c.points[k] - mapped);
        worst = std::max(worst, c.residuals[k]);
    }
    if (worst >= kOrbitTol) {
        throw CycleVerificationError(
            "constructed candidate does not close under the equilibrium map (max residual " +
            std::to_string(worst) + ")");
    }
}

CyclePoints find_cycle(int n, const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    double threshold = cycle_threshold(n, p, pol, mech);
    if (pol.chi >= threshold - kBoundaryTol) {
        throw NoCycleError("chi at or above the period-" + std::to_string(n) +
                           " cycle threshold");
    }
    CyclePoints c = cycle_candidate(n, p, pol, mech);
    verify_orbit(c, p, pol, mech);
    return c;
}

}  // namespace

double eq_map(double z_next, const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    double p_star = mech.p_star();
    if (z_next >= p_star) return z_next / (1.0 + pol.i);
    double p_hat = liquidity_bound(p, pol, mech).p_hat;
    if (!(z_next > p_hat)) {
        throw std::domain_error("eq_map: z at or below p_hat");
    }
    double i_d = deposit_rate(z_next, p, pol, mech);
    double L = liquidity_premium_of_balance(z_next * (1.0 + i_d), mech);
    return z_next / (1.0 + pol.i) * (1.0 + i_d) * (1.0 + p.alpha * L);
}

double slope_at_steady(const ModelParams& p, const Policy& pol) {
    double uq = 1.0 + pol.i * pol.chi / (p.alpha * (1.0 + pol.i * (1.0 - pol.chi)));
    double A = 1.0 - p.alpha + p.alpha * (1.0 - p.eta) * uq;
    double denom = (1.0 + pol.i) * (1.0 + (pol.chi - 1.0) * A);
    if (std::abs(denom) < 1e-14) {
        throw std::domain_error("slope_at_steady: singular denominator");
    }
    return pol.chi * A / denom;
}

double chi_m(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    return cycle_threshold(2, p, pol, mech);
}

double chi_hat_m(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    return cycle_threshold(3, p, pol, mech);
}

CyclePoints two_cycle_candidate(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    return cycle_candidate(2, p, pol, mech);
}

CyclePoints three_cycle_candidate(const ModelParams& p, const Policy& pol,
                                  const Mechanism& mech) {
    return cycle_candidate(3, p, pol, mech);
}

CyclePoints find_two_cycle(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    return find_cycle(2, p, pol, mech);
}

CyclePoints find_three_cycle(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    CyclePoints c = find_cycle(3, p, pol, mech);
    // the orbit must have exactly one point below p* (the z1<z2<p*<z3 shape is impossible)
    int below = 0;
    for (double z : c.points) below += (z < mech.p_star()) ? 1 : 0;
    if (below != 1) {
        throw CycleVerificationError("three-cycle candidate has " + std::to_string(below) +
                                     " points below p*, expected exactly 1");
    }
    return c;
}

SunspotEquilibrium find_sunspot(double z1, double z2, const ModelParams& p, const Policy& pol,
                                const Mechanism& mech) {
    if (z1 == z2) throw std::domain_error("find_sunspot: degenerate input z1 == z2");
    double f1 = eq_map(z1, p, pol, mech);
    double f2 = eq_map(z2, p, pol, mech);
    if (!(f2 < z1 && z1 < z2 && z2 < f1)) {
        throw NoSunspotError("sufficient condition f(z2) < z1 < z2 < f(z1) fails");
    }
    SunspotEquilibrium s;
    s.z1 = z1;
    s.z2 = z2;
    s.zeta1 = (z1 - f2) / (f1 - f2);
    s.zeta2 = (f1 - z2) / (f1 - f2);
    return s;
}

BackwardPath simulate_backward(double z_terminal, int n_steps, const ModelParams& p,
                               const Policy& pol, const Mechanism& mech) {
    BackwardPath out;
    out.z.assign(1, z_terminal);
    for (int t = 0; t < n_steps; ++t) {
        try {
            out.z.push_back(eq_map(out.z.back(), p, pol, mech));
        } catch (const std::exception& e) {
            out.truncated = true;
            out.diagnostic = e.what();
            break;
        }
    }
    std::reverse(out.z.begin(), out.z.end());
    return out;
}

}  // namespace frb
