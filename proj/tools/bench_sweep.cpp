// Benchmark: OpenMP-parallel bifurcation sweep vs the serial reference.
#include <chrono>
#include <cstdio>

#include "frb/params.hpp"
#include "frb/sweep.hpp"

using clk = std::chrono::steady_clock;

static double time_ms(const std::function<void()>& fn) {
    auto t0 = clk::now();
    fn();
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main() {
    frb::ModelParams p;
    p.eta = 4.0;
    frb::BifurcationSpec spec;
    spec.i = 0.05;
    spec.chi_min = 0.02;
    spec.chi_max = 0.98;
    spec.n_chi = 400;
    spec.burn_in = 2000;
    spec.samples = 32;

    std::vector<std::vector<double>> serial, parallel;
    double ts = time_ms([&] { serial = frb::bifurcation_sweep(spec, p, false); });
    double tp = time_ms([&] { parallel = frb::bifurcation_sweep(spec, p, true); });

    bool identical = serial == parallel;
    std::printf("workers:   %d\n", frb::sweep_workers());
    std::printf("serial:    %.1f ms\n", ts);
    std::printf("parallel:  %.1f ms\n", tp);
    std::printf("speedup:   %.2fx\n", ts / tp);
    std::printf("outputs:   %s\n", identical ? "bitwise identical" : "MISMATCH");
    return identical ? 0 : 1;
}
