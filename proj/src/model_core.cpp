#include "frb/model_core.hpp"

#include <cmath>
#include <stdexcept>

#include "frb/errors.hpp"
#include "frb/roots.hpp"

namespace frb {

double dm_utility(double q, const ModelParams& p) {
    if (!(q > 0.0)) throw std::domain_error("dm_utility: q must be positive");
    return p.C * std::pow(q, 1.0 - p.eta) / (1.0 - p.eta);
}

double dm_marginal(double q, const ModelParams& p) {
    if (!(q > 0.0)) throw std::domain_error("dm_marginal: q must be positive");
    return p.C * std::pow(q, -p.eta);
}

double cm_utility(double X, const ModelParams& p) {
    if (!(X > 0.0)) throw std::domain_error("cm_utility: X must be positive");
    return p.B * std::log(X);
}

double liquidity_premium_of_balance(double z, const Mechanism& mech) {
    if (!(z > 0.0)) throw std::domain_error("liquidity_premium_of_balance: z must be positive");
    if (z >= mech.p_star()) return 0.0;
    return mech.lambda(mech.v_inv(z));
}

LiquidityBound liquidity_bound(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    if (pol.chi >= 1.0) return {0.0, 0.0};  // premium bound is +inf; CRRA attains it only at 0
    double bound = pol.chi / (p.alpha * (1.0 - pol.chi));
    double q_hat = mech.q_from_lambda(bound);
    return {q_hat, mech.v(q_hat)};
}

double deposit_rate(double z, const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    if (!(z > 0.0)) throw std::domain_error("deposit_rate: z must be positive");
    double p_star = mech.p_star();
    if (z >= p_star) return 0.0;
    LiquidityBound lb = liquidity_bound(p, pol, mech);
    if (z <= lb.p_hat) {
        throw NoEquilibriumError("deposit_rate: z at or below p_hat, no monetary equilibrium");
    }
    if (pol.chi >= 1.0) return 0.0;  // chi/[chi + 0] - 1 = 0
    auto g = [&](double x) {
        double L = liquidity_premium_of_balance(z * (1.0 + x), mech);
        return pol.chi / (pol.chi + (pol.chi - 1.0) * p.alpha * L) - 1.0 - x;
    };
    // g(0) > 0 for z in (p_hat, p*); at x = p*/z - 1 the premium vanishes and g = -x < 0.
    return bisect(g, 0.0, p_star / z - 1.0, kRootTol, kRootMaxIter, "deposit_rate");
}

}  // namespace frb
