#include "frb/credit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frb/cycles.hpp"
#include "frb/errors.hpp"
#include "frb/model_core.hpp"
#include "frb/roots.hpp"

namespace frb {

namespace {

constexpr double kOrbitTol = 1e-8;

// Binding-money-margin quantity: u'(q_tilde) = 1 + i chi / (alpha [1 + i(1-chi)]).
double q_tilde_of(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    double wedge = pol.i * pol.chi / (p.alpha * (1.0 + pol.i * (1.0 - pol.chi)));
    return mech.q_from_lambda(wedge);
}

CreditRegime classify(double b_bar, double q_tilde) {
    if (b_bar <= 0.0) return CreditRegime::PureMoney;
    if (b_bar < q_tilde) return CreditRegime::MoneyCredit;
    return CreditRegime::PureCredit;
}

double credit_threshold(int n, const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    double iota = std::max(pol.i, p.rho());
    if (!(iota > 0.0)) throw std::domain_error("credit cycle threshold undefined at iota = 0");
    double g = std::pow(1.0 + iota, n);
    double aL = p.alpha * (mech.u_prime(mech.q_star() / (1.0 + iota)) - 1.0);
    return g * aL / ((g - 1.0) * (1.0 + aL));
}

std::vector<CreditState> credit_cycle_candidate(int n, const ModelParams& p, const Policy& pol,
                                                const Mechanism& mech) {
    double i = pol.i, chi = pol.chi, rho = p.rho(), mu = p.mu;
    double q_star = mech.q_star();
    double Sstar = mech.S(q_star);
    double R;  // u'(q_1)
    if (n == 2) {
        R = 1.0 + i * chi * (i + 2.0) /
                (p.alpha * (i * i * (1.0 - chi) + 2.0 * i * (1.0 - chi) + 1.0));
    } else {
        R = 1.0 + i * chi * (i * i + 3.0 * i + 3.0) /
                (p.alpha * (i * i * i * (1.0 - chi) + 3.0 * i * i * (1.0 - chi) +
                            3.0 * i * (1.0 - chi) + 1.0));
    }
    double q1 = mech.q_from_lambda(R - 1.0);
    double gr = std::pow(1.0 + rho, n) - 1.0;
    double surplus = mech.S(q1) + (1.0 + rho) * Sstar;
    if (n == 3) surplus += (1.0 + rho) * (1.0 + rho) * Sstar;
    auto b1_of = [&](double z1) {
        return (chi * mu * (1.0 - (1.0 + i) * (1.0 + i)) * z1 + mu * p.alpha * p.sigma * surplus) /
               gr;
    };
    auto h = [&](double z1) {
        double b1 = b1_of(z1);
        double io = iota_d(z1, b1, p, pol, mech);
        return z1 * (1.0 + io) + b1 - q1;
    };
    // walk the bracket down from q*; iota_d is undefined once z_1 + b_1 leaves
    // the monetary region, so stop at the last evaluable point
    double hi_z = q_star, lo_z = q_star;
    double h_hi = h(hi_z);
    bool bracketed = false;
    for (int j = 1; j <= 400; ++j) {
        double z = q_star * (1.0 - double(j) / 400.0) + 1e-9 * double(j) / 400.0;
        double val;
        try {
            val = h(z);
        } catch (const std::exception&) {
            break;
        }
        if (val * h_hi <= 0.0) {
            lo_z = z;
            bracketed = true;
            break;
        }
        hi_z = z;
        h_hi = val;
    }
    if (!bracketed) {
        throw ConvergenceError("credit cycle candidate: no admissible root for z_1");
    }
    double z1 = bisect(h, lo_z, hi_z, kRootTol, kRootMaxIter, "credit cycle z1");
    double b1 = b1_of(z1);
    std::vector<CreditState> pts;
    for (int k = 0; k < n; ++k) {
        CreditState s;
        s.z = z1 * std::pow(1.0 + i, k);
        if (k == 0) {
            s.b_bar = b1;
        } else if (k == 1) {
            s.b_bar = (1.0 + rho) * b1 - mu * p.alpha * p.sigma * Sstar;
        } else {
            s.b_bar = (1.0 + rho) * (1.0 + rho) * b1 - (2.0 + rho) * mu * p.alpha * p.sigma * Sstar;
        }
        double io = iota_d(s.z, s.b_bar, p, pol, mech);
        s.q = std::min(q_star, s.z * (1.0 + io) + s.b_bar);
        pts.push_back(s);
    }
    return pts;
}

std::vector<CreditState> find_credit_cycle(int n, const ModelParams& p, const Policy& pol,
                                           const Mechanism& mech) {
    if (p.mu == 0.0) {
        // no credit: reduce to the money-only constructors
        CyclePoints c = (n == 2) ? find_two_cycle(p, pol, mech) : find_three_cycle(p, pol, mech);
        std::vector<CreditState> pts;
        for (double z : c.points) {
            double io = iota_d(z, 0.0, p, pol, mech);
            pts.push_back({z, 0.0, std::min(mech.q_star(), z * (1.0 + io))});
        }
        return pts;
    }
    double threshold = credit_threshold(n, p, pol, mech);
    if (pol.chi >= threshold - 1e-10) {
        throw NoCycleError("chi at or above the period-" + std::to_string(n) +
                           " credit cycle threshold");
    }
    std::vector<CreditState> pts = credit_cycle_candidate(n, p, pol, mech);
    double q_star = mech.q_star();
    double a1 = pts[0].z + pts[0].b_bar;
    double a2 = pts[1].z + pts[1].b_bar;
    if (!(a1 < q_star && q_star < a2)) {
        throw CycleVerificationError("credit candidate violates a_1 < q* < a_2");
    }
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const CreditState& nxt = pts[(k + 1) % n];
        CreditState mapped = credit_map_step(nxt.z, nxt.b_bar, p, pol, mech);
        worst = std::max(worst, std::abs(mapped.z - pts[k].z));
        worst = std::max(worst, std::abs(mapped.b_bar - pts[k].b_bar));
    }
    if (worst >= kOrbitTol) {
        throw CycleVerificationError(
            "credit candidate does not close under the joint dynamics (max residual " +
            std::to_string(worst) + ")");
    }
    return pts;
}

}  // namespace

double mu_tilde(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    double qt = q_tilde_of(p, pol, mech);
    return p.rho() * qt / (p.alpha * p.sigma * mech.S(qt));
}

CreditSteadyState debt_limit_stationary(const ModelParams& p, const Policy& pol,
                                        const Mechanism& mech) {
    p.validate();
    pol.validate();
    CreditSteadyState s;
    s.q_tilde = q_tilde_of(p, pol, mech);
    double rho = p.rho();
    double q_star = mech.q_star();
    double denom_money = 1.0 + (1.0 - pol.chi) * pol.i;
    if (p.mu == 0.0) {
        s.b_bar = 0.0;
        s.q = s.q_tilde;
        s.z = s.q_tilde / denom_money;
        s.regime = CreditRegime::PureMoney;
        return s;
    }
    double k = pol.i * p.mu * pol.chi / rho;
    double b1 = (p.mu * p.sigma * p.alpha / rho * mech.S(s.q_tilde) + k * s.q_tilde) / (1.0 + k);
    if (b1 >= 0.0 && b1 < s.q_tilde) {
        s.b_bar = b1;
        s.q = s.q_tilde;
        s.z = (s.q_tilde - b1) / denom_money;
        s.regime = classify(b1, s.q_tilde);
        return s;
    }
    double b3 = p.mu * p.sigma * p.alpha / rho * mech.S(q_star);
    if (b3 >= q_star) {
        s.b_bar = b3;
        s.q = q_star;
        s.z = 0.0;
        s.regime = CreditRegime::PureCredit;
        return s;
    }
    // region 2: b = (mu sigma alpha / rho) S(b) on [q_tilde, q*]
    auto g = [&](double b) { return p.mu * p.sigma * p.alpha / rho * mech.S(b) - b; };
    // guard the single-root assumption with a coarse sign scan
    int flips = 0;
    double prev = g(s.q_tilde);
    for (int j = 1; j <= 64; ++j) {
        double b = s.q_tilde + (q_star - s.q_tilde) * j / 64.0;
        double cur = g(b);
        if (prev * cur < 0.0) ++flips;
        prev = cur;
    }
    if (flips > 1) throw ConvergenceError("debt_limit_stationary: multiple region-2 roots");
    s.b_bar = bisect(g, s.q_tilde, q_star, kRootTol, kRootMaxIter, "debt_limit_stationary");
    s.q = s.b_bar;
    s.z = 0.0;
    s.regime = CreditRegime::PureCredit;
    return s;
}

CreditSteadyState credit_steady_dynamic(const ModelParams& p, const Policy& pol,
                                        const Mechanism& mech) {
    CreditSteadyState s;
    s.q_tilde = q_tilde_of(p, pol, mech);
    double denom_money = 1.0 + (1.0 - pol.chi) * pol.i;
    double k = pol.chi * pol.i / denom_money;
    double b = p.mu * (p.alpha * p.sigma * mech.S(s.q_tilde) - k * s.q_tilde) /
               (p.rho() - k * p.mu);
    s.b_bar = b;
    s.q = s.q_tilde;
    s.z = (s.q_tilde - b) / denom_money;
    s.regime = classify(b, s.q_tilde);
    return s;
}

double iota_d(double z, double b_bar, const ModelParams& p, const Policy& pol,
              const Mechanism& mech) {
    double p_star = mech.p_star();
    if (z + b_bar >= p_star) return 0.0;
    if (!(z > 0.0)) throw std::domain_error("iota_d: z must be positive");
    if (pol.chi >= 1.0) return 0.0;
    double prem0 = mech.u_prime(z + b_bar) - 1.0;
    if (pol.chi + (pol.chi - 1.0) * p.alpha * prem0 <= 0.0) {
        throw NoEquilibriumError("iota_d: state below the monetary region");
    }
    auto g = [&](double x) {
        double q = z * (1.0 + x) + b_bar;
        double prem = q >= mech.q_star() ? 0.0 : mech.u_prime(q) - 1.0;
        return pol.chi / (pol.chi + (pol.chi - 1.0) * p.alpha * prem) - 1.0 - x;
    };
    return bisect(g, 0.0, (p_star - b_bar) / z - 1.0, kRootTol, kRootMaxIter, "iota_d");
}

CreditState credit_map_step(double z_next, double b_next, const ModelParams& p,
                            const Policy& pol, const Mechanism& mech) {
    double io = iota_d(z_next, b_next, p, pol, mech);
    double q = std::min(mech.q_star(), z_next * (1.0 + io) + b_next);
    double z_now =
        z_next / (1.0 + pol.i) * (1.0 + io) * (1.0 + p.alpha * (mech.u_prime(q) - 1.0));
    double gamma = pol.gamma(p.beta);
    double b_now = p.beta * b_next + pol.chi * p.mu * (-gamma * z_now + p.beta * z_next) +
                   p.beta * p.alpha * p.mu * p.sigma * mech.S(q);
    return {z_now, b_now, q};
}

double chi_c(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    return credit_threshold(2, p, pol, mech);
}

double chi_hat_c(const ModelParams& p, const Policy& pol, const Mechanism& mech) {
    return credit_threshold(3, p, pol, mech);
}

std::vector<CreditState> credit_two_cycle_candidate(const ModelParams& p, const Policy& pol,
                                                    const Mechanism& mech) {
    return credit_cycle_candidate(2, p, pol, mech);
}

std::vector<CreditState> credit_three_cycle_candidate(const ModelParams& p, const Policy& pol,
                                                      const Mechanism& mech) {
    return credit_cycle_candidate(3, p, pol, mech);
}

std::vector<CreditState> find_credit_two_cycle(const ModelParams& p, const Policy& pol,
                                               const Mechanism& mech) {
    return find_credit_cycle(2, p, pol, mech);
}

std::vector<CreditState> find_credit_three_cycle(const ModelParams& p, const Policy& pol,
                                                 const Mechanism& mech) {
    return find_credit_cycle(3, p, pol, mech);
}

}  // namespace frb
