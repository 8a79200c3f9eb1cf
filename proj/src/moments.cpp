// moments.cpp: Assembly and solution of the 4×4 moment systems

#include "tlsflow/moments.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "tlsflow/dressed_weights.hpp"

namespace tlsflow::moments {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_bath(const bath::ReservoirSpec& b) {
    if (!(b.temperature > 0.0)) throw DomainError("moments: temperature must be positive");
    if (!(b.prefactor >= 0.0)) throw DomainError("moments: coupling prefactor must be non-negative");
    if (b.exponent < 0) throw DomainError("moments: spectral exponent must be non-negative");
}

// Dissipative block of one reservoir in the layout shared by the global and PS generators.
Matrix4c dressed_block(const weights::ReservoirCoefficients& c) {
    const cplx q = c.q();
    const cplx t = c.t();
    const cplx y = c.y();
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = c.a();
    m(0, 2) = q;
    m(0, 3) = std::conj(q);
    m(1, 1) = c.f();
    m(1, 2) = t;
    m(1, 3) = std::conj(t);
    m(2, 0) = std::conj(t);
    m(2, 1) = std::conj(q);
    m(2, 2) = y;
    m(3, 0) = t;
    m(3, 1) = q;
    m(3, 3) = std::conj(y);
    return m;
}

}  // namespace

Vector4c MomentVector::to_double() const {
    Vector4c out;
    for (int i = 0; i < 4; ++i) {
        out(i) = cplx(static_cast<double>(values(i).real()), static_cast<double>(values(i).imag()));
    }
    return out;
}

bool MomentVector::satisfies_invariants(double tol) const {
    const Vector4c v = to_double();
    for (int i = 0; i < 2; ++i) {
        if (std::abs(v(i).imag()) > tol) return false;
        if (v(i).real() < -tol || v(i).real() > 1.0 + tol) return false;
    }
    return std::abs(v(3) - std::conj(v(2))) <= tol;
}

ExtMatrix4c MomentSystem::generator_ext() const {
    return coherent.cast<ext_cplx>() + dissipative[0].cast<ext_cplx>() + dissipative[1].cast<ext_cplx>();
}

ExtVector4c MomentSystem::source_ext() const {
    return source_part[0].cast<ext_cplx>() + source_part[1].cast<ext_cplx>();
}

Matrix4c coherent_generator(const sys::TlsPair& pair) {
    const double w = pair.coupling;
    const double dw = pair.detuning();
    Matrix4c m = Matrix4c::Zero();
    m(0, 2) = -kI * w;
    m(0, 3) = kI * w;
    m(1, 2) = kI * w;
    m(1, 3) = -kI * w;
    m(2, 0) = -kI * w;
    m(2, 1) = kI * w;
    m(2, 2) = kI * dw;
    m(3, 0) = kI * w;
    m(3, 1) = -kI * w;
    m(3, 3) = -kI * dw;
    return m;
}

MomentSystem build_moment_system(Approach approach, const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                                 const bath::ReservoirSpec& bath2) {
    pair.validate();
    check_bath(bath1);
    check_bath(bath2);

    MomentSystem s;
    s.approach = approach;
    s.pair = pair;
    s.baths = {bath1, bath2};
    s.coherent = coherent_generator(pair);

    if (approach == Approach::local) {
        const std::array<double, 2> freq{pair.omega1, pair.omega2};
        for (int j = 0; j < 2; ++j) {
            const double g = bath::relaxation_rate(s.baths[j], freq[j]);
            Matrix4c& m = s.dissipative[j];
            m(j, j) = -2.0 * g;
            m(2, 2) = -g;
            m(3, 3) = -g;
            s.source_part[j](j) = bath::correlation_fourier(s.baths[j], freq[j], +1);
        }
        return s;
    }

    const sys::DressedFrame frame = sys::dressed_frame(pair);
    const weights::Coefficients c = weights::assemble_coefficients(frame, bath1, bath2, approach);
    for (int j = 0; j < 2; ++j) {
        const auto& rc = c.reservoir[j];
        s.dissipative[j] = dressed_block(rc);
        s.source_part[j] << rc.s11(), rc.s22(), rc.s12(), std::conj(rc.s12());
    }
    return s;
}

MomentVector steady_moments(const MomentSystem& system) {
    const ExtMatrix4c m = system.generator_ext();
    const ExtVector4c g = system.source_ext();

    Eigen::PartialPivLU<ExtMatrix4c> lu(m);
    const auto rcond = static_cast<double>(lu.rcond());
    if (!(rcond >= 1e-12)) {
        throw SingularSystemError("moments: no unique steady state (reciprocal condition " + std::to_string(rcond) + ")");
    }
    ExtVector4c v = lu.solve(-g);
    const ExtVector4c r = m * v + g;
    v -= lu.solve(r);
    if (!v.allFinite()) throw SingularSystemError("moments: steady state is not finite");
    return MomentVector(v);
}

double steady_residual(const MomentSystem& system, const MomentVector& v) {
    const ExtMatrix4c m = system.generator_ext();
    const ExtVector4c g = system.source_ext();
    return static_cast<double>((m * v.values + g).norm());
}

std::vector<Vector4c> evolve_moments(const MomentSystem& system, const Vector4c& v0, const std::vector<double>& times) {
    using Matrix5c = Eigen::Matrix<cplx, 5, 5>;
    using Vector5c = Eigen::Matrix<cplx, 5, 1>;
    Matrix5c aug = Matrix5c::Zero();
    aug.topLeftCorner<4, 4>() = system.generator();
    aug.topRightCorner<4, 1>() = system.source();
    Vector5c x0;
    x0 << v0, cplx(1.0);

    std::vector<Vector4c> out;
    out.reserve(times.size());
    const double t0 = times.empty() ? 0.0 : times.front();
    for (double t : times) {
        const Matrix5c prop = (aug * cplx(t - t0)).exp();
        out.push_back((prop * x0).head<4>());
    }
    return out;
}

}  // namespace tlsflow::moments
