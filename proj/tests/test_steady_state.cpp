#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frb/errors.hpp"
#include "frb/model_core.hpp"
#include "frb/roots.hpp"
#include "frb/steady_state.hpp"

using namespace frb;

namespace {
ModelParams toy() { return ModelParams{}; }
}

TEST_CASE("Friedman rule attains the efficient quantity") {
    ModelParams p = toy();
    Mechanism mech(p);
    for (double chi : {0.01, 0.1, 0.5, 1.0}) {
        SteadyState s = solve_steady(p, {0.0, chi}, mech);
        CHECK(std::abs(s.q_s - mech.q_star()) < 1e-10);
        CHECK(s.i_d == 0.0);
    }
}

TEST_CASE("toy steady state against the bisection oracle values") {
    ModelParams p = toy();
    Mechanism mech(p);
    SteadyState s = solve_steady(p, {0.05, 0.1}, mech);
    CHECK(s.q_s == doctest::Approx(0.9811324992700073).epsilon(1e-12));
    CHECK(s.z_s == doctest::Approx(0.9388827744210597).epsilon(1e-12));
    CHECK(s.pbar_s == doctest::Approx(s.q_s).epsilon(1e-14));
    CHECK(s.i_s == 0.05);
    CHECK(s.i_l == s.i_s);
    CHECK(s.i_d == doctest::Approx((1.0 - 0.1) * 0.05).epsilon(1e-14));
    CHECK(s.mbar == doctest::Approx(0.1 * s.z_s).epsilon(1e-14));
    // stationary condition residual (the defining equation)
    double L = liquidity_premium_of_balance(s.pbar_s, mech);
    CHECK(std::abs(0.05 * 0.1 - (1.0 + 0.05 * 0.9) * 0.5 * L) < 1e-10);
}

TEST_CASE("100 percent reserves closed form") {
    ModelParams p = toy();
    Mechanism mech(p);
    SteadyState s = solve_steady(p, {0.05, 1.0}, mech);
    CHECK(s.q_s == doctest::Approx(std::pow(1.1, -2.0)).epsilon(1e-12));  // u'(q) = 1.1
    CHECK(s.z_s == doctest::Approx(s.q_s).epsilon(1e-14));                // i_d = 0
}

TEST_CASE("closed form agrees with the generic root-finder on a grid") {
    ModelParams p = toy();
    Mechanism mech(p);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            Policy pol{0.005 + 0.029 * a, 0.05 + 0.19 * b};
            SteadyState s1 = solve_steady(p, pol, mech);
            SteadyState s2 = solve_steady_generic(p, pol, mech);
            CHECK(std::abs(s1.q_s - s2.q_s) < 1e-10);
            CHECK(std::abs(s1.z_s - s2.z_s) < 1e-10);
        }
    }
}

TEST_CASE("comparative statics: closed form vs finite differences") {
    ModelParams p = toy();
    Policy pol{0.05, 0.1};
    Mechanism mech(p);
    ComparativeStatics cs = comparative_statics(p, pol, mech);
    CHECK(cs.dpbar_di < 0.0);
    CHECK(cs.dpbar_dchi < 0.0);
    double fd_i = central_diff(
        [&](double i) { return solve_steady(p, {i, pol.chi}, mech).pbar_s; }, pol.i);
    double fd_chi = central_diff(
        [&](double chi) { return solve_steady(p, {pol.i, chi}, mech).pbar_s; }, pol.chi);
    CHECK(cs.dpbar_di == doctest::Approx(fd_i).epsilon(1e-5));
    CHECK(cs.dpbar_dchi == doctest::Approx(fd_chi).epsilon(1e-5));
}

TEST_CASE("q_s strictly decreasing in i and chi on a 20x20 grid") {
    ModelParams p = toy();
    Mechanism mech(p);
    double q[20][20];
    for (int a = 0; a < 20; ++a) {
        for (int b = 0; b < 20; ++b) {
            double i = 0.005 + (0.15 - 0.005) * a / 19.0;
            double chi = 0.05 + (1.0 - 0.05) * b / 19.0;
            q[a][b] = solve_steady(p, {i, chi}, mech).q_s;
        }
    }
    for (int a = 0; a < 20; ++a) {
        for (int b = 0; b < 20; ++b) {
            if (a + 1 < 20) CHECK(q[a + 1][b] < q[a][b]);
            if (b + 1 < 20) CHECK(q[a][b + 1] < q[a][b]);
        }
    }
}
