#include "frb/welfare.hpp"

#include <cmath>
#include <stdexcept>

#include "frb/calibration.hpp"
#include "frb/roots.hpp"
#include "frb/steady_state.hpp"

namespace frb {

WelfareDecomposition welfare_level(const ModelParams& p, const Policy& pol) {
    Mechanism mech(p);
    // mu > 0: region-1 closed-form debt limit throughout (see README on Model 2)
    MomentDerivatives m = moment_derivatives(p, pol);
    WelfareDecomposition w;
    w.money_cost = -pol.i * pol.chi * m.z;
    w.dm_surplus = p.sigma * p.alpha * mech.S(m.q);
    w.cm_surplus = p.B * std::log(p.B) - p.B;
    return w;
}

WelfareReport welfare_cost(double pi_tilde, const ModelParams& p, double chi,
                           bool symmetric_scaling) {
    double pi0 = p.beta - 1.0;
    if (pi_tilde < pi0 - 1e-14) {
        throw std::domain_error("welfare_cost: pi_tilde below the deflation bound beta - 1");
    }
    Policy pol{std::max(0.0, (1.0 + pi_tilde) / p.beta - 1.0), chi};
    Mechanism mech(p);
    double W = welfare_level(p, pol).total();
    double q_star = mech.q_star();
    auto h = [&](double delta) {
        double dm = symmetric_scaling
                        ? p.sigma * p.alpha * (mech.u(delta * q_star) - delta * q_star)
                        : p.sigma * p.alpha * (mech.u(delta * q_star) - q_star);
        return dm + p.B * std::log(p.B * delta) - p.B - W;
    };
    double delta = bisect(h, 1e-9, 1.5, 1e-12, kRootMaxIter, "welfare_cost");
    WelfareReport r;
    r.pi_tilde = pi_tilde;
    r.delta = delta;
    r.cost = 1.0 - delta;
    r.decomposition = welfare_level(p, pol);
    return r;
}

}  // namespace frb
