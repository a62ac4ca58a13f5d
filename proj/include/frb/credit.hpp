#pragma once

#include <string>
#include <vector>

#include "frb/params.hpp"

namespace frb {

enum class CreditRegime { PureMoney, PureCredit, MoneyCredit };

// Stationary equilibrium of the money-and-credit system.
struct CreditSteadyState {
    double q_tilde;  // DM quantity under a binding money margin
    double b_bar;    // stationary debt limit
    double z;        // money real balance
    double q;        // traded quantity min(q*, q_tilde-or-b_bar branch)
    CreditRegime regime;
};

// One point of a credit orbit / path.
struct CreditState {
    double z;
    double b_bar;
    double q;
};

// Coexistence boundary mu_tilde = rho q_tilde / (alpha sigma [u(q_tilde) - q_tilde]).
double mu_tilde(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Stationary debt limit via the paper's three-branch Omega map.
CreditSteadyState debt_limit_stationary(const ModelParams& p, const Policy& pol,
                                        const Mechanism& mech);

// Fixed point of the joint backward dynamics (differs from the Omega point;
// used as the terminal condition for transition paths).
CreditSteadyState credit_steady_dynamic(const ModelParams& p, const Policy& pol,
                                        const Mechanism& mech);

// Deposit rate with credit: fixed point of
// iota = chi/[chi + (chi-1) alpha (u'(z(1+iota)+b) - 1)] - 1; 0 when z + b >= p*.
double iota_d(double z, double b_bar, const ModelParams& p, const Policy& pol,
              const Mechanism& mech);

// One backward step of the joint dynamics: z_t from the z-equation first,
// then b_t with z_t substituted on its right-hand side.
CreditState credit_map_step(double z_next, double b_next, const ModelParams& p,
                            const Policy& pol, const Mechanism& mech);

// Credit cycle thresholds with iota = max{i, rho} replacing i in the premium.
double chi_c(const ModelParams& p, const Policy& pol, const Mechanism& mech);
double chi_hat_c(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Candidate orbits from the proof's closed forms (no verification).
std::vector<CreditState> credit_two_cycle_candidate(const ModelParams& p, const Policy& pol,
                                                    const Mechanism& mech);
std::vector<CreditState> credit_three_cycle_candidate(const ModelParams& p, const Policy& pol,
                                                      const Mechanism& mech);

// Candidate plus verification under credit_map_step (residuals < 1e-8).
std::vector<CreditState> find_credit_two_cycle(const ModelParams& p, const Policy& pol,
                                               const Mechanism& mech);
std::vector<CreditState> find_credit_three_cycle(const ModelParams& p, const Policy& pol,
                                                 const Mechanism& mech);

}  // namespace frb
