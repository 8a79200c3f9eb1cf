#include <cmath>
#include <random>

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "tlsflow/flows.hpp"
#include "tlsflow/moments.hpp"

using namespace tlsflow;
using doctest::Approx;

namespace {
const bath::ReservoirSpec kB1{0.2, 0.002, 3};
const bath::ReservoirSpec kB2{0.22, 0.04, 3};
}  // namespace

TEST_SUITE("moments") {
    TEST_CASE("uncoupled local steady state is Gibbs") {
        const auto s = moments::build_moment_system(Approach::local, {1.0, 0.9, 0.0}, kB1, kB2);
        const auto v = moments::steady_moments(s);
        const double n1 = bath::mean_occupation(1.0, 0.2);
        const double n2 = bath::mean_occupation(0.9, 0.22);
        CHECK(v.occupancy1() == Approx(n1 / (2 * n1 + 1)).epsilon(1e-13));
        CHECK(v.occupancy2() == Approx(n2 / (2 * n2 + 1)).epsilon(1e-13));
        CHECK(std::abs(v.coherence()) == 0.0);
    }

    TEST_CASE("local generator entries") {
        const sys::TlsPair p{1.0, 1.0, 0.01};
        const auto s = moments::build_moment_system(Approach::local, p, kB1, kB2);
        const double g1 = bath::relaxation_rate(kB1, 1.0), g2 = bath::relaxation_rate(kB2, 1.0);
        const Matrix4c m = s.generator();
        CHECK(m(0, 0).real() == Approx(-2 * g1));
        CHECK(m(1, 1).real() == Approx(-2 * g2));
        CHECK(m(2, 2).real() == Approx(-(g1 + g2)));
        CHECK(m(0, 2) == cplx(0, -0.01));
        CHECK(s.source()(0).real() == Approx(bath::correlation_fourier(kB1, 1.0, +1)));
        CHECK((s.generator() - (s.coherent + s.dissipative[0] + s.dissipative[1])).norm() == 0.0);
    }

    TEST_CASE("equal baths and frequencies give no coherence") {
        const auto s = moments::build_moment_system(Approach::local, {1.0, 1.0, 0.02}, kB1, kB1);
        CHECK(std::abs(moments::steady_moments(s).coherence()) < 1e-18);
    }

    TEST_CASE("local steady state matches intermediates") {
        const sys::TlsPair p{1.0, 1.09, 0.03};
        const bath::ReservoirSpec b1{0.2, 0.001, 3}, b2{0.22, 0.002, 3};
        const auto v = moments::steady_moments(moments::build_moment_system(Approach::local, p, b1, b2));
        const auto cf = flows::local_flow_closed(p, b1, b2);
        CHECK(v.occupancy1() == Approx(cf.x).epsilon(1e-12));
        CHECK(v.occupancy2() == Approx(cf.y).epsilon(1e-12));
        CHECK(v.coherence().real() == Approx(cf.c).epsilon(1e-12));
        CHECK(v.coherence().imag() == Approx(cf.p).epsilon(1e-12));
    }

    TEST_CASE("steady states are physical and generators dissipative") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 40; ++i) {
            const double w1 = 0.5 + u(rng);
            const sys::TlsPair p{w1, w1 + 0.2 * (u(rng) - 0.5), 1e-4 * std::pow(1e3, u(rng))};
            const bath::ReservoirSpec b1{0.1 + 0.4 * u(rng), 1e-4 * std::pow(1e3, u(rng)), 3};
            const bath::ReservoirSpec b2{0.1 + 0.4 * u(rng), 1e-4 * std::pow(1e3, u(rng)), 3};
            for (Approach a : {Approach::local, Approach::global, Approach::partial_secular}) {
                const auto s = moments::build_moment_system(a, p, b1, b2);
                const auto v = moments::steady_moments(s);
                CHECK(v.satisfies_invariants());
                CHECK(moments::steady_residual(s, v) < 1e-16);
                Eigen::ComplexEigenSolver<Matrix4c> es(s.generator());
                CHECK(es.eigenvalues().real().maxCoeff() < 0.0);
            }
        }
    }

    TEST_CASE("zero coupling prefactor is singular") {
        const bath::ReservoirSpec off{0.2, 0.0, 3};
        const auto s = moments::build_moment_system(Approach::local, {1.0, 1.0, 0.0}, off, off);
        CHECK_THROWS_AS(moments::steady_moments(s), SingularSystemError);
    }

    TEST_CASE("dressed builders reject a missing frame") {
        CHECK_THROWS_AS(moments::build_moment_system(Approach::global, {1.0, 1.0, 0.0}, kB1, kB2), DressedFrameError);
        CHECK_THROWS_AS(moments::build_moment_system(Approach::partial_secular, {1.0, 1.0, 1.2}, kB1, kB2),
                        DressedFrameError);
    }

    TEST_CASE("PS approaches local at weak coupling") {
        const sys::TlsPair p{1.0, 1.0, 1e-6};
        const Matrix4c ml = moments::build_moment_system(Approach::local, p, kB1, kB2).generator();
        const Matrix4c mp = moments::build_moment_system(Approach::partial_secular, p, kB1, kB2).generator();
        CHECK((ml - mp).norm() / ml.norm() < 1e-3);
    }

    TEST_CASE("evolution relaxes to the steady state") {
        const auto s = moments::build_moment_system(Approach::partial_secular, {1.0, 1.05, 0.02}, kB1, kB2);
        const Vector4c steady = moments::steady_moments(s).to_double();
        const auto flat = moments::evolve_moments(s, steady, {0.0, 10.0, 100.0});
        for (const auto& v : flat) CHECK((v - steady).norm() < 1e-12);

        Eigen::ComplexEigenSolver<Matrix4c> es(s.generator());
        const double rate = -es.eigenvalues().real().maxCoeff();
        const Vector4c excited(1.0, 1.0, 0.0, 0.0);
        const auto traj = moments::evolve_moments(s, excited, {0.0, 1.0, 50.0 / rate});
        CHECK(std::abs(traj[1](3) - std::conj(traj[1](2))) < 1e-12);
        CHECK((traj.back() - steady).norm() < 1e-10);
    }
}
