#pragma once

#include <string>
#include <vector>

#include "frb/params.hpp"

namespace frb {

// Perfect-foresight path around a policy change announced at t = 0 and
// implemented at t = T.
struct TransitionPath {
    int T;
    double i0, iT, chi;
    std::vector<double> z_path;  // t = 0..T
    std::vector<double> b_path;  // empty when mu = 0
    bool truncated = false;
    std::string diagnostic;
    // share of the total move realized by t = 1: (z_1 - z_s(i0)) / (z_T - z_s(i0))
    double initial_response_share = 0.0;
};

// Terminal point solves the new-policy fixed point; earlier points iterate
// the old-policy backward map.
TransitionPath announce_transition(double i0, double iT, int T, double chi,
                                   const ModelParams& p);

// Joint (z, b) version via the credit dynamics; terminal condition is the
// dynamics-consistent credit steady state.
TransitionPath announce_transition_credit(double i0, double iT, int T, double chi,
                                          const ModelParams& p);

}  // namespace frb
