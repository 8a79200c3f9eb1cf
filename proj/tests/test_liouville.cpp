#include <cmath>
#include <random>

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "tlsflow/flows.hpp"
#include "tlsflow/liouville.hpp"

using namespace tlsflow;
using doctest::Approx;

namespace {
const bath::ReservoirSpec kB1{0.2, 0.002, 3};
const bath::ReservoirSpec kB2{0.22, 0.04, 3};

Matrix4c random_matrix(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Matrix4c m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = cplx(n(rng), n(rng));
    return m;
}
}  // namespace

TEST_SUITE("liouville") {
    TEST_CASE("vectorization identities") {
        std::mt19937_64 rng(11);
        const Matrix4c x = random_matrix(rng), y = random_matrix(rng), rho = random_matrix(rng);
        using namespace liouville;
        CHECK((unvec(left_multiply(x) * vec(rho)) - x * rho).norm() < 1e-12);
        CHECK((unvec(right_multiply(y) * vec(rho)) - rho * y).norm() < 1e-12);
        CHECK((unvec(lindblad(x, y) * vec(rho)) - (2.0 * x * rho * y - y * x * rho - rho * y * x)).norm() < 1e-11);
        CHECK((unvec(commutator(x) * vec(rho)) - (x * rho - rho * x)).norm() < 1e-12);
    }

    TEST_CASE("trace preservation and hermiticity") {
        std::mt19937_64 rng(5);
        for (Approach a : {Approach::local, Approach::global, Approach::partial_secular}) {
            const auto l = liouville::build_liouvillian(a, {1.0, 1.0, 0.02}, kB1, kB2);
            CHECK((l.total() - (l.coherent + l.dissipative[0] + l.dissipative[1])).norm() == 0.0);
            const Vector16c trace_row = liouville::vec(Matrix4c::Identity());
            CHECK((trace_row.adjoint() * l.total()).norm() < 1e-12);

            Matrix4c h = random_matrix(rng);
            h = (h + h.adjoint()).eval();
            const Matrix4c out = liouville::unvec(l.total() * liouville::vec(h));
            CHECK((out - out.adjoint()).norm() < 1e-12);

            Eigen::ComplexEigenSolver<Matrix16c> es(l.total(), false);
            int zeros = 0;
            for (int i = 0; i < 16; ++i) zeros += std::abs(es.eigenvalues()(i)) < 1e-10;
            CHECK(zeros == 1);
        }
    }

    TEST_CASE("uncoupled local steady state is a product of Gibbs states") {
        const auto l = liouville::build_liouvillian(Approach::local, {1.0, 0.9, 0.0}, kB1, kB2);
        const auto s = liouville::steady_density(l);
        const double p1 = std::exp(-1.0 / 0.2) / (1 + std::exp(-1.0 / 0.2));
        const double p2 = std::exp(-0.9 / 0.22) / (1 + std::exp(-0.9 / 0.22));
        CHECK(s.rho.isDiagonal(1e-14));
        CHECK(s.rho(3, 3).real() == Approx(p1 * p2).epsilon(1e-9));
        CHECK(s.rho(2, 2).real() == Approx(p1 * (1 - p2)).epsilon(1e-9));
        CHECK(s.valid());
    }

    TEST_CASE("global dressed-mode populations at zero detuning") {
        const sys::TlsPair p{1.0, 1.0, 0.05};
        const auto l = liouville::build_liouvillian(Approach::global, p, kB1, kB2);
        const auto s = liouville::steady_density(l);
        const Matrix4c a = (sys::sigma1() + sys::sigma2()) / std::sqrt(2.0);
        const double pop = (a.adjoint() * a * s.rho).trace().real();
        const double w = 1.05;
        const double n1 = bath::mean_occupation(w, 0.2), n2 = bath::mean_occupation(w, 0.22);
        const double g1 = bath::coupling_rate(kB1, w), g2 = bath::coupling_rate(kB2, w);
        CHECK(pop == Approx((n1 * g1 + n2 * g2) / ((2 * n1 + 1) * g1 + (2 * n2 + 1) * g2)).epsilon(1e-8));
    }

    TEST_CASE("oracle matches moments and flows") {
        for (Approach a : {Approach::local, Approach::global, Approach::partial_secular}) {
            const sys::TlsPair p{1.0, 1.04, 0.02};
            const auto l = liouville::build_liouvillian(a, p, kB1, kB2);
            const auto s = liouville::steady_density(l);
            CHECK(s.valid());
            CHECK(liouville::steady_density_residual(l, s) < 1e-11);
            const auto df = liouville::density_flows(s, l, sys::hamiltonian_matrix(p));
            const auto sys_m = moments::build_moment_system(a, p, kB1, kB2);
            const auto v = moments::steady_moments(sys_m);
            const auto rep = flows::stationary_flows(sys_m, v);
            CHECK((liouville::moments_of(s) - v.to_double()).norm() < 1e-9);
            CHECK(df.J1 == Approx(rep.J1).epsilon(1e-9));
            CHECK(df.J2 == Approx(rep.J2).epsilon(1e-9));
            CHECK(std::abs(df.coherent) < 1e-15);
            CHECK(std::abs(df.J1 + df.J2) < 1e-11 * std::abs(df.J1));
        }
    }

    TEST_CASE("evolution keeps trace and converges") {
        const auto l = liouville::build_liouvillian(Approach::partial_secular, {1.0, 1.0, 0.01}, kB1, kB2);
        const auto steady = liouville::steady_density(l);
        liouville::DensityState excited;
        excited.rho(3, 3) = 1.0;
        const auto traj = liouville::evolve_density(l, excited, {0.0, 10.0, 100.0, 1000.0, 30000.0});
        for (const auto& s : traj) {
            CHECK(std::abs(s.rho.trace() - cplx(1.0)) < 1e-10);
            CHECK((s.rho - s.rho.adjoint()).norm() < 1e-10);
            for (int i = 0; i < 4; ++i) {
                CHECK(s.rho(i, i).real() >= -1e-10);
                CHECK(s.rho(i, i).real() <= 1 + 1e-10);
            }
        }
        CHECK((traj.back().rho - steady.rho).norm() < 1e-9);
        const auto fixed = liouville::evolve_density(l, steady, {0.0, 500.0});
        CHECK((fixed.back().rho - steady.rho).norm() < 1e-12);
    }
}
