#include <cmath>

#include <doctest.h>

#include "tlsflow/flows.hpp"
#include "tlsflow/spectra.hpp"

using namespace tlsflow;
using doctest::Approx;

namespace {
const bath::ReservoirSpec kB1{0.2, 0.002, 3};
const bath::ReservoirSpec kB2{0.22, 0.04, 3};
}  // namespace

TEST_SUITE("flows") {
    TEST_CASE("local flow contraction equals the explicit expression") {
        const sys::TlsPair p{1.0, 1.03, 0.01};
        const auto s = moments::build_moment_system(Approach::local, p, kB1, kB2);
        const auto v = moments::steady_moments(s);
        const auto rep = flows::stationary_flows(s, v);
        const double g1 = bath::relaxation_rate(kB1, 1.0);
        const double explicit_j1 = -2 * 1.0 * g1 * v.occupancy1() + 1.0 * bath::correlation_fourier(kB1, 1.0, +1) -
                                   2 * p.coupling * g1 * v.coherence().real();
        CHECK(rep.J1 == Approx(explicit_j1).epsilon(1e-12));
        CHECK(std::abs(rep.coherent_residual) <= 1e-12 * std::abs(rep.J1));
        CHECK(rep.first_law_ok);
    }

    TEST_CASE("no flow without coupling") {
        const auto rep = flows::steady_flows(Approach::local, {1.0, 1.0, 0.0}, kB1, kB2);
        CHECK(std::abs(rep.J1) < 1e-20);
        CHECK(std::abs(rep.J2) < 1e-20);
        CHECK(std::isnan(rep.j1));
        CHECK(flows::local_flow_closed({1.0, 1.0, 0.0}, kB1, kB2).J1 == 0.0);
    }

    TEST_CASE("non-steady vector is rejected") {
        const auto s = moments::build_moment_system(Approach::local, {1.0, 1.0, 0.01}, kB1, kB2);
        CHECK_THROWS_AS(flows::stationary_flows(s, moments::MomentVector(Vector4c(0.3, 0.1, 0.0, 0.0))),
                        SingularSystemError);
    }

    TEST_CASE("heat flows from the hot reservoir") {
        for (Approach a : {Approach::local, Approach::global, Approach::partial_secular}) {
            const auto rep = flows::steady_flows(a, {1.0, 1.0, 0.01}, {0.2, 0.001, 3}, {0.22, 0.002, 3});
            CHECK(rep.hot == 1);
            CHECK(rep.J2 > 0.0);
            CHECK(rep.J1 < 0.0);
            CHECK(rep.j_hot() == Approx(rep.J2 / 0.01));
            CHECK(rep.second_law_ok);
        }
    }

    TEST_CASE("closed local flow") {
        CHECK(flows::local_flow_closed({1.0, 1.0, 0.02}, {0.3, 0.01, 3}, {0.3, 0.02, 3}).J1 == 0.0);
        const sys::TlsPair p{1.0, 1.0, 0.0};
        const bath::ReservoirSpec b1{0.2, 0.002 / 0.50678, 3}, b2{0.22, 0.004 / 0.50678, 3};
        const double g1 = bath::relaxation_rate(b1, 1.0), g2 = bath::relaxation_rate(b2, 1.0);
        sys::TlsPair at_max = p;
        at_max.coupling = flows::omega_max_local_closed(g1, g2, 0.0);
        CHECK(flows::steady_flows(Approach::local, at_max, b1, b2).J1 ==
              Approx(flows::local_flow_closed(at_max, b1, b2).J1).epsilon(1e-12));
    }

    TEST_CASE("closed-form optimum coupling") {
        CHECK(flows::omega_max_local_closed(3e-3, 3e-3, 0.0) == Approx(3e-3));
        CHECK(flows::omega_max_local_closed(1e-3, 2e-3, 0.0) == Approx(1.41421e-3).epsilon(1e-5));
        CHECK(flows::omega_max_local_closed(1e-9, 2e-9, -0.09) == Approx(0.09 * std::sqrt(2.0) / 3).epsilon(1e-6));
    }

    TEST_CASE("closed global flow") {
        const bath::ReservoirSpec same{0.2, 0.01, 3};
        CHECK(flows::global_flow_closed({1.0, 1.0, 0.05}, same, {0.2, 0.03, 3}) == 0.0);
        CHECK(flows::global_flow_closed({1.0, 1.0, 0.05}, kB1, kB2) < 0.0);
        CHECK_THROWS_AS(flows::global_flow_closed({1.0, 1.1, 0.05}, kB1, kB2), UnsupportedError);
        CHECK_THROWS_AS(flows::global_flow_closed({1.0, 1.0, 1.0}, kB1, kB2), DomainError);
        const sys::TlsPair p{1.2, 1.2, 0.03};
        CHECK(flows::steady_flows(Approach::global, p, kB1, kB2).J1 ==
              Approx(flows::global_flow_closed(p, kB1, kB2)).epsilon(1e-10));
    }

    TEST_CASE("local flow saturates and specific flow peaks at the closed-form coupling") {
        const double g1 = bath::relaxation_rate(kB1, 1.0), g2 = bath::relaxation_rate(kB2, 1.0);
        const sys::TlsPair p{1.0, 1.0, 0.0};
        double prev = 0.0;
        for (double w : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
            sys::TlsPair q = p;
            q.coupling = w;
            const double j = std::abs(flows::local_flow_closed(q, kB1, kB2).J1);
            CHECK(j >= prev);
            prev = j;
        }
        const auto opt = flows::omega_max_numeric(Approach::local, p, kB1, kB2, 1e-5, 1.0);
        CHECK(opt.interior);
        CHECK(opt.peaks == 1);
        CHECK(opt.omega_star == Approx(std::sqrt(g1 * g2)).epsilon(1e-6));
        for (double d : {-1e-6, 1e-6}) {
            sys::TlsPair q = p;
            q.coupling = opt.omega_star * (1 + d);
            CHECK(std::abs(flows::steady_flows(Approach::local, q, kB1, kB2).j_hot()) <= std::abs(opt.j_star));
        }
    }

    TEST_CASE("PS optimum is of the order of the exceptional point") {
        const bath::ReservoirSpec b1{0.2, 0.001, 3}, b2{0.22, 0.002, 3};
        const double g1 = bath::relaxation_rate(b1, 1.0), g2 = bath::relaxation_rate(b2, 1.0);
        const auto opt = flows::omega_max_numeric(Approach::partial_secular, {1.0, 1.0, 0.0}, b1, b2, 1e-6, 0.1);
        const double scale = std::sqrt(g1 * g2);
        CHECK(opt.omega_star < 3 * scale);
        CHECK(opt.omega_star > scale / 3);
    }

    TEST_CASE("optimal line at zero detuning is the geometric mean") {
        const std::vector<double> gammas{1e-4, 1e-3, 1e-2};
        const auto line = flows::optimal_line(Approach::local, gammas, kB1, kB2, {1.0, 1.0, 0.0}, 2.0, 1e-6, 0.5, 3);
        for (const auto& pt : line) {
            REQUIRE(pt.ok);
            const bath::ReservoirSpec b1{0.2, pt.gamma1_ref, 3}, b2{0.22, 2 * pt.gamma1_ref, 3};
            const double expected = std::sqrt(bath::relaxation_rate(b1, 1.0) * bath::relaxation_rate(b2, 1.0));
            CHECK(pt.optimum.omega_star == Approx(expected).epsilon(1e-6));
        }
    }

    TEST_CASE("local second-law violation predicate") {
        const sys::TlsPair witness{1.0, 0.8, 0.01};
        const bath::ReservoirSpec b1{0.25, 0.002, 3}, b2{0.22, 0.004, 3};
        CHECK(flows::local_violation_predicate(witness, 0.25, 0.22));
        const auto rep = flows::steady_flows(Approach::local, witness, b1, b2);
        CHECK(rep.hot == 0);
        CHECK(rep.J1 < 0.0);
        CHECK_FALSE(rep.second_law_ok);
        const auto v = flows::thermo_check(rep, Approach::local, witness, b1, b2);
        CHECK(v.local_predicate_violation);
        CHECK(v.first_law_ok);

        const auto ps = flows::steady_flows(Approach::partial_secular, witness, b1, b2);
        CHECK(ps.second_law_ok);
        CHECK_FALSE(flows::thermo_check(ps, Approach::partial_secular, witness, b1, b2).local_predicate_applies);

        CHECK_FALSE(flows::local_violation_predicate({1.0, 1.0, 0.01}, 0.2, 0.22));
    }
}
