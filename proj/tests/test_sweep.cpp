#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "frb/params.hpp"
#include "frb/sweep.hpp"

using namespace frb;

TEST_CASE("parallel sweep preserves index order") {
    auto rows = sweep_parallel(257, [](std::size_t k) {
        return std::vector<double>{static_cast<double>(k), std::sin(0.1 * k)};
    });
    REQUIRE(rows.size() == 257);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k][0] == static_cast<double>(k));
        CHECK(rows[k][1] == std::sin(0.1 * k));
    }
}

TEST_CASE("parallel and serial kernels are bitwise identical") {
    ModelParams p;
    p.eta = 4.0;
    BifurcationSpec spec;
    spec.n_chi = 80;
    spec.burn_in = 400;
    spec.samples = 8;
    auto par = bifurcation_sweep(spec, p, true);
    auto ser = bifurcation_sweep(spec, p, false);
    REQUIRE(par.size() == ser.size());
    for (std::size_t r = 0; r < par.size(); ++r) {
        REQUIRE(par[r].size() == ser[r].size());
        for (std::size_t c = 0; c < par[r].size(); ++c) {
            CHECK(par[r][c] == ser[r][c]);  // exact, not approximate
        }
    }
}

TEST_CASE("worker cap from the environment") {
    setenv("FRB_DYN_THREADS", "1", 1);
    CHECK(sweep_workers() == 1);
    unsetenv("FRB_DYN_THREADS");
    CHECK(sweep_workers() >= 1);
}

TEST_CASE("bifurcation rows carry the chi grid") {
    ModelParams p;
    p.eta = 4.0;
    BifurcationSpec spec;
    spec.chi_min = 0.2;
    spec.chi_max = 0.8;
    spec.n_chi = 4;
    spec.burn_in = 50;
    spec.samples = 3;
    auto rows = bifurcation_sweep(spec, p, true);
    REQUIRE(rows.size() == 4);
    CHECK(rows.front()[0] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(rows.back()[0] == doctest::Approx(0.8).epsilon(1e-14));
    for (auto& r : rows) REQUIRE(r.size() == 1 + 3);
}
