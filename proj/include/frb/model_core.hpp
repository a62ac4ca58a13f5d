#pragma once

#include "frb/params.hpp"

namespace frb {

// Lower boundary of the monetary region: lambda(q_hat) = chi/(alpha(1-chi)).
struct LiquidityBound {
    double q_hat;
    double p_hat;
};

// u(q) = C q^{1-eta}/(1-eta); throws on q <= 0.
double dm_utility(double q, const ModelParams& p);
// u'(q) = C q^{-eta}.
double dm_marginal(double q, const ModelParams& p);
// U(X) = B log(X); maximizer of U(X)-X is X* = B.
double cm_utility(double X, const ModelParams& p);

// L(z) = lambda(v^{-1}(z)) for z < p*, exactly 0 for z >= p*.
double liquidity_premium_of_balance(double z, const Mechanism& mech);

// q_hat from Lemma-1's premium bound; q_hat = 0 when chi = 1 (CRRA: lambda(0+) = +inf).
LiquidityBound liquidity_bound(const ModelParams& p, const Policy& pol, const Mechanism& mech);

// Unique fixed point of i_d = chi/[chi + (chi-1) alpha L(z(1+i_d))] - 1 on [0, p*/z - 1].
// Returns 0 for z >= p*; throws NoEquilibriumError for z <= p_hat.
double deposit_rate(double z, const ModelParams& p, const Policy& pol, const Mechanism& mech);

}  // namespace frb
