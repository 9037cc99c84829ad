#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "xxchain/correlations.hpp"
#include "xxchain/finite_chain.hpp"

using namespace xxchain;
constexpr double kPi = std::numbers::pi;

TEST_CASE("dispersion anchors") {
    CHECK(dispersion(0.0, 0.7) == -1.0);
    CHECK(std::fabs(dispersion(kPi / 2.0, 0.0)) < 1e-15);
    CHECK(std::fabs(dispersion(kPi / 2.0, 3.7)) < 1e-15);  // sin(2k) vanishes there too
    CHECK(std::fabs(dispersion(-kPi / 2.0, 2.2)) < 1e-15);
    CHECK(std::fabs(dispersion(kPi / 4.0, 2.0) - (1.0 - std::sqrt(2.0) / 2.0)) < 1e-15);
}

TEST_CASE("build_sea: symmetric sea below the split") {
    const FermiSea sea = build_sea(8, 0.0, Sector::half_integer_k);
    REQUIRE(sea.filled.size() == 4);
    CHECK(std::fabs(sea.filled[0] + 3.0 * kPi / 8.0) < 1e-12);
    CHECK(std::fabs(sea.filled[1] + kPi / 8.0) < 1e-12);
    CHECK(std::fabs(sea.filled[2] - kPi / 8.0) < 1e-12);
    CHECK(std::fabs(sea.filled[3] - 3.0 * kPi / 8.0) < 1e-12);
    CHECK(sea.boundary_modes == 0);

    // integer grid on a ring with 4 | N puts modes right on the sea edge
    const FermiSea edgy = build_sea(8, 0.3, Sector::integer_k);
    CHECK(edgy.boundary_modes == 2);

    // all filled momenta carry strictly negative energy
    for (double a : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        const FermiSea s = build_sea(64, a, Sector::half_integer_k);
        for (double k : s.filled) CHECK(dispersion(k, a) < 0.0);
        // half filling, up to the zero-mode allowance
        CHECK(std::fabs(static_cast<double>(s.filled.size()) / 64.0 - 0.5) <= 1.0 / 64.0);
    }

    CHECK_THROWS_AS(build_sea(6, 0.5, Sector::half_integer_k), std::out_of_range);
    CHECK_THROWS_AS(build_sea(9, 0.5, Sector::half_integer_k), std::invalid_argument);
    CHECK_THROWS_AS(build_sea(131072, 0.5, Sector::half_integer_k), std::out_of_range);
}

TEST_CASE("build_sea: split sea above the transition stays inside its intervals") {
    const double alpha = 2.0;
    const double kf = std::asin(1.0 / alpha);
    const int n = 4096;
    const FermiSea sea = build_sea(n, alpha, Sector::half_integer_k);
    const double fuzz = 2.0 * kPi / n;
    for (double k : sea.filled) {
        const bool in_main = (k > -kPi / 2.0 - fuzz) && (k < kf + fuzz);
        const bool in_upper = (k > kPi / 2.0 - fuzz) && (k < kPi - kf + fuzz);
        CHECK((in_main || in_upper));
    }
    CHECK(std::fabs(static_cast<double>(sea.filled.size()) / n - 0.5) <= 1.0 / n);
}

TEST_CASE("finite_g: values, parity, validation") {
    CHECK(std::fabs(finite_g(4096, 0.5, 1) - 2.0 / kPi) < 2e-3);
    CHECK(std::fabs(finite_g(4096, 0.5, 2)) < 1e-12);  // even m cancels on the ring too
    CHECK(std::fabs(finite_g(4096, 2.0, 1) - 1.0 / kPi) < 2e-3);
    CHECK(finite_g(512, 0.7, 3) == finite_g(512, 0.7, -3));
    CHECK(std::fabs(finite_g(4096, 0.3, 0)) < 1e-12);  // (2/N) sum 1 - 1 = 2*(N/2)/N - 1

    CHECK_THROWS_AS(finite_g(4096, 0.5, 4096), std::out_of_range);
    CHECK_THROWS_AS(finite_g(4, 0.5, 1), std::out_of_range);
}

TEST_CASE("finite_g converges to the closed form as the ring grows") {
    for (double a : {0.5, 2.0})
        for (int m : {1, 2, 3}) {
            const double exact = g_function(m, a);
            double prev = -1.0;
            for (int n : {512, 1024, 2048, 4096}) {
                const double err = std::fabs(finite_g(n, a, m) - exact);
                // O(1/N): the scaled error stays bounded along the doubling sweep
                CHECK(err * n < 2.5);
                if (prev >= 0.0 && prev > 1e-12) CHECK(err <= 0.65 * prev + 1e-15);
                prev = err;
            }
            CHECK(std::fabs(finite_g(4096, a, m) - exact) < 2e-3);
        }
}

TEST_CASE("free-fermion ground energy") {
    CHECK(std::fabs(ff_ground_energy(8, 0.0) + 2.6131259297527531) < 1e-12);
    // thermodynamic density at alpha = 0 is -1/pi
    CHECK(std::fabs(ff_ground_energy(4096, 0.0) / 4096.0 + 1.0 / kPi) < 1e-3);
    // the current term only lowers the ground energy
    CHECK(ff_ground_energy(8, 5.0) < ff_ground_energy(8, 0.0));
    CHECK_THROWS_AS(ff_ground_energy(7, 0.0), std::invalid_argument);
}

TEST_CASE("exact diagonalization matches free fermions") {
    for (int n : {4, 6, 8})
        for (double a : {0.0, 0.5, 1.0, 2.0})
            CHECK(std::fabs(ed_ground_energy(n, a) - ff_ground_energy(n, a)) < 1e-9);
    CHECK_THROWS_AS(ed_ground_energy(3, 0.5), std::out_of_range);
    CHECK_THROWS_AS(ed_ground_energy(12, 0.5), std::out_of_range);
}
