#pragma once

#include <string>
#include <vector>

#include "frb/params.hpp"

namespace frb {

// Ordered periodic orbit of the backward equilibrium map.
struct CyclePoints {
    int period;                     // 2 or 3
    std::vector<double> points;     // ascending real balances
    std::vector<double> residuals;  // |z_k - f(z_{k+1 mod n})|
};

// Two-state sunspot equilibrium with Markov stay-probabilities.
struct SunspotEquilibrium {
    double z1, z2;
    double zeta1, zeta2;
};

// Backward equilibrium map: z_t as a function of z_{t+1}.
// Linear branch z/(1+i) for z >= p*; throws below p_hat.
double eq_map(double z_next, const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Closed-form slope f'(z_s) of the backward map at the steady state (CRRA TIOLI).
double slope_at_steady(const ModelParams& p, const Policy& pol);

// Two-period (n=2) and three-period (n=3) cycle thresholds:
// chi_m = (1+i)^n alpha L(p*/(1+i)) / {[(1+i)^n - 1][1 + alpha L(p*/(1+i))]}.
double chi_m(const ModelParams& p, const Policy& pol, const Mechanism& mech);
double chi_hat_m(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Semi-analytic candidate orbit (construction only, no verification):
// pbar_1 from alpha L(pbar_1) = chi D_n/((1+i)^n - chi D_n) with D_n = (1+i)^n - 1,
// i_d1 = (1+i)^n/(1 + alpha L(pbar_1)) - 1, z_1 = pbar_1/(1+i_d1), z_k = (1+i)^{k-1} z_1.
CyclePoints two_cycle_candidate(const ModelParams& p, const Policy& pol, const Mechanism& mech);
CyclePoints three_cycle_candidate(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Candidate construction plus orbit verification under eq_map (residuals < 1e-8).
// Throws NoCycleError at/above the threshold, CycleVerificationError when the
// candidate does not close as a genuine orbit.
CyclePoints find_two_cycle(const ModelParams& p, const Policy& pol, const Mechanism& mech);
CyclePoints find_three_cycle(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// zeta1 = (z1 - f(z2))/(f(z1) - f(z2)), zeta2 = (f(z1) - z2)/(f(z1) - f(z2)).
// Requires the sufficient condition f(z2) < z1 < z2 < f(z1).
SunspotEquilibrium find_sunspot(double z1, double z2, const ModelParams& p, const Policy& pol,
                                const Mechanism& mech);

// s[n] = z_terminal, s[t] = eq_map(s[t+1]); truncates with the steps completed
// if an iterate exits the admissible region.
struct BackwardPath {
    std::vector<double> z;  // time-ordered, z.back() = z_terminal
    bool truncated = false;
    std::string diagnostic;
};
BackwardPath simulate_backward(double z_terminal, int n_steps, const ModelParams& p,
                               const Policy& pol, const Mechanism& mech);

}  // namespace frb
