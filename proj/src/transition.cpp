#include "frb/transition.hpp"

#include <algorithm>
#include <cmath>

#include "frb/credit.hpp"
#include "frb/cycles.hpp"
#include "frb/steady_state.hpp"

namespace frb {

TransitionPath announce_transition(double i0, double iT, int T, double chi,
                                   const ModelParams& p) {
    Mechanism mech(p);
    Policy old_pol{i0, chi};
    Policy new_pol{iT, chi};
    TransitionPath path;
    path.T = T;
    path.i0 = i0;
    path.iT = iT;
    path.chi = chi;
    double zT = solve_steady(p, new_pol, mech).z_s;
    std::vector<double> rev{zT};
    for (int t = T - 1; t >= 0; --t) {
        try {
            rev.push_back(eq_map(rev.back(), p, old_pol, mech));
        } catch (const std::exception& e) {
            path.truncated = true;
            path.diagnostic = e.what();
            break;
        }
    }
    path.z_path.assign(rev.rbegin(), rev.rend());
    double z_old = solve_steady(p, old_pol, mech).z_s;
    if (path.z_path.size() >= 2 && zT != z_old) {
        path.initial_response_share = (path.z_path[1] - z_old) / (zT - z_old);
    }
    return path;
}

TransitionPath announce_transition_credit(double i0, double iT, int T, double chi,
                                          const ModelParams& p) {
    Mechanism mech(p);
    Policy old_pol{i0, chi};
    Policy new_pol{iT, chi};
    TransitionPath path;
    path.T = T;
    path.i0 = i0;
    path.iT = iT;
    path.chi = chi;
    CreditSteadyState term = credit_steady_dynamic(p, new_pol, mech);
    std::vector<double> zr{term.z};
    std::vector<double> br{term.b_bar};
    for (int t = T - 1; t >= 0; --t) {
        try {
            CreditState s = credit_map_step(zr.back(), br.back(), p, old_pol, mech);
            zr.push_back(s.z);
            br.push_back(s.b_bar);
        } catch (const std::exception& e) {
            path.truncated = true;
            path.diagnostic = e.what();
            break;
        }
    }
    path.z_path.assign(zr.rbegin(), zr.rend());
    path.b_path.assign(br.rbegin(), br.rend());
    CreditSteadyState old_ss = credit_steady_dynamic(p, old_pol, mech);
    if (path.z_path.size() >= 2 && term.z != old_ss.z) {
        path.initial_response_share = (path.z_path[1] - old_ss.z) / (term.z - old_ss.z);
    }
    return path;
}

}  // namespace frb
