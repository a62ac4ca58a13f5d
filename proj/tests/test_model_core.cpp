#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frb/errors.hpp"
#include "frb/model_core.hpp"
#include "frb/params.hpp"

using namespace frb;

namespace {
ModelParams toy() { return ModelParams{}; }  // beta .96, sigma .5, alpha .5, C 1, eta .5
}

TEST_CASE("DM and CM utility primitives") {
    ModelParams p = toy();
    CHECK(dm_marginal(1.0, p) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dm_marginal(0.25, p) == doctest::Approx(2.0).epsilon(1e-14));
    ModelParams cal = p;
    cal.C = 0.9956;
    cal.eta = 0.0568;
    CHECK(dm_marginal(1.0, cal) == doctest::Approx(0.9956).epsilon(1e-14));
    CHECK(dm_utility(1.0, p) == doctest::Approx(2.0).epsilon(1e-14));  // 1/(1-.5)
    CHECK(cm_utility(p.B, p) == doctest::Approx(p.B * std::log(p.B)).epsilon(1e-14));
    CHECK_THROWS_AS(dm_utility(0.0, p), std::domain_error);
    CHECK_THROWS_AS(dm_marginal(-1.0, p), std::domain_error);
    CHECK_THROWS_AS(cm_utility(0.0, p), std::domain_error);
}

TEST_CASE("liquidity premium of balance") {
    Mechanism mech(1.0, 0.5);
    CHECK(liquidity_premium_of_balance(mech.p_star(), mech) == 0.0);
    CHECK(liquidity_premium_of_balance(0.81, mech) ==
          doctest::Approx(1.0 / 0.9 - 1.0).epsilon(1e-12));
    CHECK(liquidity_premium_of_balance(1.5, mech) == 0.0);
    CHECK_THROWS_AS(liquidity_premium_of_balance(0.0, mech), std::domain_error);
    // strict monotonicity below q*
    double prev = liquidity_premium_of_balance(0.05, mech);
    for (double z = 0.1; z < mech.p_star(); z += 0.05) {
        double cur = liquidity_premium_of_balance(z, mech);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("liquidity bound") {
    ModelParams p = toy();
    Mechanism mech(p);
    SUBCASE("chi = 1 collapses the bound to zero") {
        LiquidityBound lb = liquidity_bound(p, {0.05, 1.0}, mech);
        CHECK(lb.q_hat == 0.0);
        CHECK(lb.p_hat == 0.0);
    }
    SUBCASE("log utility analytic point") {
        // lambda(q) = 1/q - 1 = 2  =>  q_hat = 1/3
        Mechanism ml(1.0, 1.0);
        LiquidityBound lb = liquidity_bound(p, {0.05, 0.5}, ml);
        CHECK(lb.q_hat == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("CRRA closed form") {
        LiquidityBound lb = liquidity_bound(p, {0.05, 0.1}, mech);
        double expect = std::pow(1.0 + 2.0 / 9.0, -2.0);  // q^{-1/2} = 1 + 0.1/0.45
        CHECK(lb.q_hat == doctest::Approx(expect).epsilon(1e-12));
        CHECK(mech.lambda(lb.q_hat) == doctest::Approx(0.1 / (0.5 * 0.9)).epsilon(1e-12));
    }
}

TEST_CASE("deposit rate fixed point") {
    ModelParams p = toy();
    Policy pol{0.05, 0.1};
    Mechanism mech(p);
    CHECK(deposit_rate(mech.p_star(), p, pol, mech) == 0.0);
    CHECK(deposit_rate(2.0, p, pol, mech) == 0.0);
    CHECK(deposit_rate(0.9, p, {0.05, 1.0}, mech) == 0.0);
    double id = deposit_rate(0.9, p, pol, mech);
    CHECK(id == doctest::Approx(0.07673611015856979).epsilon(1e-9));
    CHECK(0.9 * (1.0 + id) <= mech.p_star() + 1e-12);
    CHECK_THROWS_AS(deposit_rate(0.1, p, pol, mech), NoEquilibriumError);
    CHECK_THROWS_AS(deposit_rate(-1.0, p, pol, mech), std::domain_error);

    SUBCASE("residual below 1e-12 and weakly decreasing in z") {
        double p_hat = liquidity_bound(p, pol, mech).p_hat;
        double prev_id = 1e9;
        for (int k = 1; k <= 40; ++k) {
            double z = p_hat + (1.3 - p_hat) * k / 40.0;
            double x = deposit_rate(z, p, pol, mech);
            double L = liquidity_premium_of_balance(z * (1.0 + x), mech);
            double resid = x - (pol.chi / (pol.chi + (pol.chi - 1.0) * p.alpha * L) - 1.0);
            CHECK(std::abs(resid) < 1e-12);
            CHECK(x <= prev_id + 1e-10);
            prev_id = x;
        }
    }
}

TEST_CASE("matching-function construction") {
    for (double sigma : {0.3, 0.5, 0.7}) {
        ModelParams p = ModelParams::with_matching(sigma);
        CHECK(p.alpha == 1.0 - sigma);
        CHECK(p.alpha_s == sigma);
    }
}

TEST_CASE("parameter validation") {
    ModelParams p = toy();
    CHECK_NOTHROW(p.validate());
    ModelParams bad = p;
    bad.eta = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = p;
    bad.B = 2.0;  // log(2) < 1
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    Policy pol{-0.01, 0.5};
    CHECK_THROWS_AS(pol.validate(), std::domain_error);
    Policy pol2{0.05, 1.5};
    CHECK_THROWS_AS(pol2.validate(), std::domain_error);
}
