#include "frb/sweep.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frb/cycles.hpp"
#include "frb/steady_state.hpp"

namespace frb {

int sweep_workers() {
    int n = 1;
#ifdef _OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* cap = std::getenv("FRB_DYN_THREADS")) {
        int c = std::atoi(cap);
        if (c > 0 && c < n) n = c;
    }
    return n;
}

std::vector<std::vector<double>> sweep_serial(
    std::size_t n, const std::function<std::vector<double>(std::size_t)>& fn) {
    std::vector<std::vector<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return out;
}

std::vector<std::vector<double>> sweep_parallel(
    std::size_t n, const std::function<std::vector<double>(std::size_t)>& fn) {
    std::vector<std::vector<double>> out(n);
#ifdef _OPENMP
    int workers = sweep_workers();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long long k = 0; k < static_cast<long long>(n); ++k) {
        out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    }
#else
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
#endif
    return out;
}

std::vector<std::vector<double>> bifurcation_sweep(const BifurcationSpec& spec,
                                                   const ModelParams& p, bool parallel) {
    if (spec.n_chi < 1) throw std::domain_error("bifurcation_sweep: n_chi must be positive");
    Mechanism mech(p);
    auto row = [&](std::size_t k) {
        double chi = spec.n_chi == 1
                         ? spec.chi_min
                         : spec.chi_min + (spec.chi_max - spec.chi_min) * double(k) /
                                              double(spec.n_chi - 1);
        Policy pol{spec.i, chi};
        double z = solve_steady(p, pol, mech).z_s * (1.0 + 1e-3);
        std::vector<double> r;
        r.reserve(1 + spec.samples);
        r.push_back(chi);
        for (int t = 0; t < spec.burn_in + spec.samples; ++t) {
            try {
                z = eq_map(z, p, pol, mech);
            } catch (const std::exception&) {
                // iterate left the admissible region; hold the last value
            }
            if (t >= spec.burn_in) r.push_back(z);
        }
        return r;
    };
    return parallel ? sweep_parallel(static_cast<std::size_t>(spec.n_chi), row)
                    : sweep_serial(static_cast<std::size_t>(spec.n_chi), row);
}

}  // namespace frb
