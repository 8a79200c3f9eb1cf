#include <cmath>

#include <doctest.h>

#include "tlsflow/bath.hpp"
#include "tlsflow/dressed_weights.hpp"

using namespace tlsflow;
using doctest::Approx;

TEST_SUITE("dressed_weights") {
    TEST_CASE("G-vectors at zero detuning") {
        const bath::ReservoirSpec b{0.2, 0.002, 3};
        const auto f = sys::dressed_frame({1.0, 1.0, 0.05});
        const auto g = weights::build_gvectors(f, b);
        CHECK(g.gl(0) == Approx(0.5 * bath::correlation_fourier(b, 1.05, -1)));
        CHECK(g.gl(1) == Approx(0.5 * bath::correlation_fourier(b, 1.05, +1)));
        CHECK(g.gl(2) == Approx(0.5 * bath::correlation_fourier(b, 0.95, -1)));
        CHECK(g.gl(3) == Approx(0.5 * bath::correlation_fourier(b, 0.95, +1)));
        CHECK(g.gl(0) > g.gl(1));
        CHECK(g.ps(0) == Approx(0.25 * (bath::correlation_fourier(b, 0.95, -1) + bath::correlation_fourier(b, 1.05, -1))));
        CHECK((g.gl.array() > 0).all());
        CHECK((g.ps.array() > 0).all());
        CHECK(g.gl_fs.norm() == 0.0);
    }

    TEST_CASE("weight tables at y = 0") {
        const auto w = weights::build_weight_tables(sys::dressed_frame({1.0, 1.0, 0.05}));
        for (int i = 0; i < 4; ++i) {
            CHECK(w.occ1_occ1.gl[0](i) == Approx(-0.5));
            CHECK(w.occ1_occ1.ps[0](i) == Approx(-0.5));
        }
        CHECK((w.occ2_occ2.gl[1] - w.occ1_occ1.gl[0]).norm() < 1e-15);
    }

    TEST_CASE("global coefficients") {
        const bath::ReservoirSpec b{0.2, 0.002, 3};
        const auto f = sys::dressed_frame({1.0, 1.0, 0.05});
        const auto c = weights::assemble_coefficients(f, b, b, Approach::global);
        CHECK(std::abs(c.a() - c.f()) < 1e-18);
        CHECK(std::abs(c.c()) == 0.0);
        CHECK(std::abs(c.d()) == 0.0);
        CHECK(std::abs(c.q() - c.b()) == 0.0);
        CHECK(std::abs(c.t() - c.b()) == 0.0);
        for (const auto& r : c.reservoir) {
            CHECK(std::abs(r.a_ps) == 0.0);
            CHECK(std::abs(r.s11_ps) == 0.0);
        }
        CHECK_THROWS_AS(weights::assemble_coefficients(f, b, b, Approach::local), std::invalid_argument);
    }

    TEST_CASE("figure parameters damp") {
        const bath::ReservoirSpec b1{0.2, 0.002, 3}, b2{0.22, 0.04, 3};
        const auto f = sys::dressed_frame({1.0, 1.0, 0.05});
        for (Approach m : {Approach::global, Approach::partial_secular}) {
            const auto c = weights::assemble_coefficients(f, b1, b2, m);
            CHECK(c.a().real() < 0.0);
            CHECK(c.f().real() < 0.0);
            CHECK(std::abs(c.a() - (c.reservoir[0].a() + c.reservoir[1].a())) == 0.0);
        }
    }
}
