// liouville.cpp: Superoperator assembly, null-space steady state and density-level flows

#include "tlsflow/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace tlsflow::liouville {

namespace {

constexpr cplx kI{0.0, 1.0};

// Dissipative part of reservoir j for the dressed-operator approaches.
Matrix16c dressed_dissipator(Approach approach, const sys::DressedFrame& frame, const bath::ReservoirSpec& b,
                             const Matrix4c& A, const Matrix4c& B) {
    const double a = frame.lower_frequency();
    const double u = frame.upper_frequency();
    auto G = [&](double w, int sign) { return bath::correlation_fourier(b, w, sign); };
    const Matrix4c Ad = A.adjoint();
    const Matrix4c Bd = B.adjoint();

    Matrix16c d = 0.5 * G(u, -1) * lindblad(A, Ad) + 0.5 * G(u, +1) * lindblad(Ad, A) +
                  0.5 * G(a, -1) * lindblad(B, Bd) + 0.5 * G(a, +1) * lindblad(Bd, B);
    if (approach != Approach::partial_secular) return d;

    // half-sided transforms G∓(x) = G(x)/2
    auto H = [&](double w, int sign) { return 0.5 * G(w, sign); };
    d += 0.5 * (H(a, -1) + H(u, -1)) * lindblad(A, Bd) + 0.5 * (H(a, -1) - H(u, -1)) * commutator(Bd * A);
    d += 0.5 * (H(u, +1) + H(a, +1)) * lindblad(Bd, A) + 0.5 * (H(u, +1) - H(a, +1)) * commutator(A * Bd);
    d += 0.5 * (H(a, +1) + H(u, +1)) * lindblad(Ad, B) + 0.5 * (H(a, +1) - H(u, +1)) * commutator(B * Ad);
    d += 0.5 * (H(u, -1) + H(a, -1)) * lindblad(B, Ad) + 0.5 * (H(u, -1) - H(a, -1)) * commutator(Ad * B);
    return d;
}

}  // namespace

bool DensityState::valid(double tol) const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho.trace() - cplx(1.0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

Matrix16c left_multiply(const Matrix4c& x) { return Eigen::kroneckerProduct(Matrix4c::Identity(), x).eval(); }

Matrix16c right_multiply(const Matrix4c& y) {
    return Eigen::kroneckerProduct(Matrix4c(y.transpose()), Matrix4c::Identity()).eval();
}

Matrix16c lindblad(const Matrix4c& x, const Matrix4c& y) {
    const Matrix4c yx = y * x;
    return 2.0 * Matrix16c(Eigen::kroneckerProduct(Matrix4c(y.transpose()), x)) - left_multiply(yx) -
           right_multiply(yx);
}

Matrix16c commutator(const Matrix4c& x) { return left_multiply(x) - right_multiply(x); }

Vector16c vec(const Matrix4c& m) { return Eigen::Map<const Vector16c>(m.data()); }

Matrix4c unvec(const Vector16c& v) { return Eigen::Map<const Matrix4c>(v.data()); }

Liouvillian build_liouvillian(Approach approach, const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                              const bath::ReservoirSpec& bath2) {
    pair.validate();
    Liouvillian l;
    l.coherent = -kI * commutator(sys::hamiltonian_matrix(pair));
    const std::array<bath::ReservoirSpec, 2> baths{bath1, bath2};

    if (approach == Approach::local) {
        const std::array<Matrix4c, 2> s{sys::sigma1(), sys::sigma2()};
        const std::array<double, 2> w{pair.omega1, pair.omega2};
        for (int j = 0; j < 2; ++j) {
            const Matrix4c sd = s[j].adjoint();
            l.dissipative[j] = 0.5 * bath::correlation_fourier(baths[j], w[j], -1) * lindblad(s[j], sd) +
                               0.5 * bath::correlation_fourier(baths[j], w[j], +1) * lindblad(sd, s[j]);
        }
        return l;
    }

    const sys::DressedFrame frame = sys::dressed_frame(pair);
    const sys::DressedOperators ops = sys::dressed_operator_matrices(pair);
    l.dissipative[0] = dressed_dissipator(approach, frame, bath1, ops.A1, ops.B1);
    l.dissipative[1] = dressed_dissipator(approach, frame, bath2, ops.A2, ops.B2);
    return l;
}

DensityState steady_density(const Liouvillian& l) {
    const Matrix16c total = l.total();
    Eigen::ComplexEigenSolver<Matrix16c> es(total);
    std::array<int, 16> order{};
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return std::abs(es.eigenvalues()(i)) < std::abs(es.eigenvalues()(j)); });
    if (std::abs(es.eigenvalues()(order[1])) <= 1e-10) {
        throw SingularSystemError("steady_density: non-unique steady state");
    }
    Matrix4c rho = unvec(es.eigenvectors().col(order[0]));
    rho /= rho.trace();
    DensityState s;
    s.rho = 0.5 * (rho + rho.adjoint());
    return s;
}

double steady_density_residual(const Liouvillian& l, const DensityState& s) { return (l.total() * vec(s.rho)).norm(); }

DensityFlows density_flows(const DensityState& s, const Liouvillian& l, const Matrix4c& hamiltonian) {
    const Vector16c v = vec(s.rho);
    auto energy_rate = [&](const Matrix16c& part) { return (hamiltonian * unvec(part * v)).trace().real(); };
    return {energy_rate(l.dissipative[0]), energy_rate(l.dissipative[1]), energy_rate(l.coherent)};
}

Vector4c moments_of(const DensityState& s) {
    const Matrix4c s1 = sys::sigma1();
    const Matrix4c s2 = sys::sigma2();
    Vector4c m;
    m << (s1.adjoint() * s1 * s.rho).trace(), (s2.adjoint() * s2 * s.rho).trace(), (s1.adjoint() * s2 * s.rho).trace(),
        (s2.adjoint() * s1 * s.rho).trace();
    return m;
}

std::vector<DensityState> evolve_density(const Liouvillian& l, const DensityState& rho0,
                                         const std::vector<double>& times) {
    const Matrix16c total = l.total();
    const Vector16c v0 = vec(rho0.rho);
    std::vector<DensityState> out;
    out.reserve(times.size());
    const double t0 = times.empty() ? 0.0 : times.front();
    for (double t : times) {
        const Matrix16c prop = (total * cplx(t - t0)).exp();
        DensityState s;
        s.rho = unvec(prop * v0);
        out.push_back(s);
    }
    return out;
}

}  // namespace tlsflow::liouville
