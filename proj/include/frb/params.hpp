#pragma once

#include <cmath>
#include <stdexcept>

namespace frb {

// Preferences, matching, and monitoring primitives.
struct ModelParams {
    double beta = 0.96;    // discount factor per period
    double sigma = 0.5;    // probability of being a buyer
    double alpha = 0.5;    // buyer match probability
    double alpha_s = 0.5;  // seller match probability
    double B = 3.0;        // CM utility level, U(X) = B log(X)
    double C = 1.0;        // DM utility level
    double eta = 0.5;      // DM relative risk aversion (eta != 1)
    double mu = 0.0;       // monitoring probability

    void validate() const {
        if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("beta must be in (0,1)");
        if (!(sigma > 0.0 && sigma < 1.0)) throw std::domain_error("sigma must be in (0,1)");
        if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must be in (0,1]");
        if (!(alpha_s > 0.0 && alpha_s <= 1.0)) throw std::domain_error("alpha_s must be in (0,1]");
        if (!(C > 0.0)) throw std::domain_error("C must be positive");
        if (!(eta > 0.0) || eta == 1.0) throw std::domain_error("eta must be positive and != 1");
        if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("mu must be in [0,1]");
        if (!(std::log(B) > 1.0)) throw std::domain_error("log(B) must exceed 1");
    }

    // Matching M(B,S) = BS/(B+S) over buyer mass sigma and seller mass 1-sigma.
    static ModelParams with_matching(double sigma) {
        ModelParams p;
        p.sigma = sigma;
        p.alpha = 1.0 - sigma;   // M(sigma, 1-sigma)/sigma
        p.alpha_s = sigma;       // M(sigma, 1-sigma)/(1-sigma)
        return p;
    }

    double rho() const { return 1.0 / beta - 1.0; }
};

// Monetary policy pair (i, chi) with derived growth factor.
struct Policy {
    double i = 0.0;    // net nominal interest rate
    double chi = 1.0;  // reserve requirement

    void validate() const {
        if (!(i >= 0.0)) throw std::domain_error("i must be nonnegative");
        if (!(chi > 0.0 && chi <= 1.0)) throw std::domain_error("chi must be in (0,1]");
    }

    double gamma(double beta) const { return beta * (1.0 + i); }  // gross money growth
};

// Take-it-or-leave-it trading mechanism with CRRA DM utility:
// v(q) = q, lambda(q) = C q^{-eta} - 1, q* = C^{1/eta}.
struct Mechanism {
    double C = 1.0;
    double eta = 0.5;

    explicit Mechanism(const ModelParams& p) : C(p.C), eta(p.eta) {}
    Mechanism(double C_, double eta_) : C(C_), eta(eta_) {}

    double q_star() const { return std::pow(C, 1.0 / eta); }
    double p_star() const { return q_star(); }  // v is the identity

    double v(double q) const { return q; }
    double v_inv(double p) const { return p; }

    double u(double q) const { return C * std::pow(q, 1.0 - eta) / (1.0 - eta); }
    double u_prime(double q) const { return C * std::pow(q, -eta); }
    double u_second(double q) const { return -eta * C * std::pow(q, -eta - 1.0); }

    // Trade surplus S(q) = u(q) - q.
    double S(double q) const { return u(q) - q; }

    double lambda(double q) const {
        if (q >= q_star()) return 0.0;
        return u_prime(q) - 1.0;
    }
    // Inverse of lambda on (0, q*): lambda(q) = l  =>  q = (C/(1+l))^{1/eta}.
    double q_from_lambda(double l) const { return std::pow(C / (1.0 + l), 1.0 / eta); }
};

}  // namespace frb
