#include "frb/steady_state.hpp"

#include <cmath>

#include "frb/errors.hpp"
#include "frb/model_core.hpp"
#include "frb/roots.hpp"

namespace frb {

namespace {

SteadyState assemble(double q, const Policy& pol, const Mechanism& mech) {
    SteadyState s;
    s.q_s = q;
    s.pbar_s = mech.v(q);
    s.i_s = pol.i;
    s.i_l = pol.i;
    s.i_d = (1.0 - pol.chi) * pol.i;
    s.z_s = s.pbar_s / (1.0 + s.i_d);
    s.mbar = pol.chi * s.z_s;
    return s;
}

// Liquidity wedge at the steady state: alpha L(pbar_s) = i chi / (1 + i(1-chi)).
double wedge(const ModelParams& p, const Policy& pol) {
    return pol.i * pol.chi / (1.0 + pol.i * (1.0 - pol.chi));
}

}  // namespace

SteadyState solve_steady(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    p.validate();
    pol.validate();
    if (pol.i == 0.0) return assemble(mech.q_star(), pol, mech);
    double q = mech.q_from_lambda(wedge(p, pol) / p.alpha);
    return assemble(q, pol, mech);
}

SteadyState solve_steady_generic(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    p.validate();
    pol.validate();
    if (pol.i == 0.0) return assemble(mech.q_star(), pol, mech);
    double p_star = mech.p_star();
    double p_hat = liquidity_bound(p, pol, mech).p_hat;
    double k = wedge(p, pol);
    auto resid = [&](double pbar) {
        return p.alpha * liquidity_premium_of_balance(pbar, mech) - k;
    };
    double lo = p_hat > 0.0 ? p_hat * (1.0 + 1e-12) : p_star * 1e-12;
    if (resid(lo) < 0.0) {
        throw NoEquilibriumError("solve_steady_generic: policy outside existence region");
    }
    double pbar = bisect(resid, lo, p_star, 1e-14, kRootMaxIter, "solve_steady_generic");
    return assemble(mech.v_inv(pbar), pol, mech);
}

ComparativeStatics comparative_statics(const ModelParams& p, const Policy& pol,
                                       const Mechanism& mech) {
    if (!(pol.i > 0.0)) throw std::domain_error("comparative_statics: requires i > 0");
    SteadyState s = solve_steady(p, pol, mech);
    // alpha L(pbar_s) = k(i,chi); implicit differentiation with L'(pbar) = u''(pbar) (v = id).
    double denom = 1.0 + pol.i * (1.0 - pol.chi);
    double dk_di = pol.chi / (denom * denom);
    double dk_dchi = pol.i * (1.0 + pol.i) / (denom * denom);
    double Lp = mech.u_second(mech.v_inv(s.pbar_s));
    return {dk_di / (p.alpha * Lp), dk_dchi / (p.alpha * Lp)};
}

}  // namespace frb
