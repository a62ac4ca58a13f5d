#pragma once

#include "frb/params.hpp"

namespace frb {

// Stationary monetary equilibrium.
struct SteadyState {
    double q_s;     // DM consumption
    double pbar_s;  // buyer liquidity position v(q_s)
    double z_s;     // buyer real balance pbar_s/(1+i_d)
    double i_d;     // deposit rate
    double i_s;     // saving rate
    double i_l;     // loan rate
    double mbar;    // real fiat balance chi * z_s
};

// CRRA closed form: u'(q_s) = 1 + i chi / (alpha [1 + i(1-chi)]).
SteadyState solve_steady(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Generic-mechanism path: bisection on the stationary condition
// i chi = {1 + i(1-chi)} alpha L(pbar) over pbar in (p_hat, p*].
SteadyState solve_steady_generic(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Closed-form partials of pbar_s with respect to i and chi (both strictly negative).
struct ComparativeStatics {
    double dpbar_di;
    double dpbar_dchi;
};
ComparativeStatics comparative_statics(const ModelParams& p, const Policy& pol,
                                       const Mechanism& mech);

}  // namespace frb
