#pragma once

#include "frb/params.hpp"

namespace frb {

// (1-beta) W split into its three stationary components.
struct WelfareDecomposition {
    double money_cost;  // -i * chi * z
    double dm_surplus;  // sigma alpha [u(q) - q]
    double cm_surplus;  // B ln(B) - B
    double total() const { return money_cost + dm_surplus + cm_surplus; }
};

struct WelfareReport {
    double pi_tilde;  // net inflation rate, beta(1+i) - 1
    double delta;     // consumption scale solving the compensation equation
    double cost;      // 1 - delta
    WelfareDecomposition decomposition;
};

// Stationary welfare at policy (i, chi); mu > 0 evaluates the credit steady
// state with the region-1 closed-form debt limit.
WelfareDecomposition welfare_level(const ModelParams& p, const Policy& pol);

// Welfare cost of inflation pi_tilde relative to the i = 0 benchmark:
// (1-beta)W = sigma alpha {u(q* delta) - q*} + B ln(B delta) - B, cost = 1 - delta.
// symmetric_scaling switches to the u(delta q*) - delta q* alternative.
WelfareReport welfare_cost(double pi_tilde, const ModelParams& p, double chi,
                           bool symmetric_scaling = false);

}  // namespace frb
