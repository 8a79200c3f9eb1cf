#include <cmath>

#include <doctest.h>

#include "tlsflow/bath.hpp"
#include "tlsflow/types.hpp"

using namespace tlsflow;
using doctest::Approx;

TEST_SUITE("bath") {
    TEST_CASE("mean occupation") {
        CHECK(bath::mean_occupation(1.0, 0.2) == Approx(6.78363e-3).epsilon(1e-5));
        CHECK(bath::mean_occupation(1.0, 1e-3) == 0.0);
        CHECK(bath::mean_occupation(1.0, 0.22) > bath::mean_occupation(1.0, 0.2));
        CHECK_THROWS_AS(bath::mean_occupation(0.0, 0.2), DomainError);
        CHECK_THROWS_AS(bath::mean_occupation(1.0, -1.0), DomainError);
    }

    TEST_CASE("power-law coupling rate") {
        CHECK(bath::coupling_rate({0.2, 0.002, 3}, 1.0) == Approx(0.002));
        CHECK(bath::coupling_rate({0.2, 0.04, 3}, 0.5) == Approx(0.005));
        CHECK(bath::coupling_rate({0.2, 0.7, 0}, 3.3) == Approx(0.7));
    }

    TEST_CASE("correlation transform values") {
        const bath::ReservoirSpec s{0.2, 0.002, 3};
        CHECK(bath::correlation_fourier(s, 1.0, +1) == Approx(1.35673e-5).epsilon(1e-5));
        CHECK(bath::relaxation_rate(s, 1.0) == Approx(1.01357e-3).epsilon(1e-5));
        CHECK_THROWS_AS(bath::correlation_fourier(s, 1.0, 0), DomainError);
    }

    TEST_CASE("emission minus absorption is the rate, ratio is Boltzmann") {
        for (double T : {0.05, 0.2, 0.5, 3.0}) {
            for (double w : {0.3, 1.0, 1.7}) {
                const bath::ReservoirSpec s{T, 0.013, 3};
                const double gm = bath::correlation_fourier(s, w, -1);
                const double gp = bath::correlation_fourier(s, w, +1);
                CHECK(gm - gp == Approx(bath::coupling_rate(s, w)).epsilon(1e-12));
                CHECK(gp / gm == Approx(std::exp(-w / T)).epsilon(1e-12));
                CHECK(bath::relaxation_rate(s, w) == Approx(0.5 * (gm + gp)).epsilon(1e-14));
            }
        }
    }

    TEST_CASE("zero temperature limit") {
        const bath::ReservoirSpec s{1e-4, 0.01, 3};
        CHECK(bath::relaxation_rate(s, 1.0) == Approx(0.005));
    }

    TEST_CASE("reservoir parameter validation") {
        CHECK_THROWS_AS((bath::ReservoirSpec{0.0, 1.0, 3}.validate()), DomainError);
        CHECK_THROWS_AS((bath::ReservoirSpec{1.0, 0.0, 3}.validate()), DomainError);
        CHECK_NOTHROW((bath::ReservoirSpec{1.0, 1.0, 0}.validate()));
    }
}
