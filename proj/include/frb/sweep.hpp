#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frb/params.hpp"

namespace frb {

// Evaluate fn over [0, n) into a vector ordered by index. The parallel kernel
// uses OpenMP (worker count capped by FRB_DYN_THREADS); the serial variant is
// the reference implementation kept for testing. Both produce bitwise
// identical results because each slot is written exactly once.
std::vector<std::vector<double>> sweep_parallel(
    std::size_t n, const std::function<std::vector<double>(std::size_t)>& fn);
std::vector<std::vector<double>> sweep_serial(
    std::size_t n, const std::function<std::vector<double>(std::size_t)>& fn);

// Effective worker count after the FRB_DYN_THREADS cap.
int sweep_workers();

// Long-run orbit samples of the backward map against chi, for bifurcation
// plots: rows (chi, sample_index, z).
struct BifurcationSpec {
    double i = 0.05;
    double chi_min = 0.01;
    double chi_max = 0.99;
    int n_chi = 50;
    int burn_in = 200;
    int samples = 16;
};
std::vector<std::vector<double>> bifurcation_sweep(const BifurcationSpec& spec,
                                                   const ModelParams& p, bool parallel = true);

}  // namespace frb
