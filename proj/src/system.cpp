// system.cpp: Hamiltonian and dressed operators of the TLS pair

#include "tlsflow/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tlsflow::sys {

void TlsPair::validate() const {
    if (!(omega1 > 0.0) || !(omega2 > 0.0)) throw DomainError("system: TLS frequencies must be positive");
    if (!(coupling >= 0.0)) throw DomainError("system: coupling must be non-negative");
}

DressedFrame dressed_frame(const TlsPair& pair) {
    pair.validate();
    if (pair.coupling == 0.0) {
        throw DressedFrameError("system: dressed frame undefined at zero coupling (use the local approach)");
    }
    DressedFrame f;
    f.detuning = pair.detuning();
    f.mean_frequency = 0.5 * (pair.omega1 + pair.omega2);
    f.half_splitting = 0.5 * std::hypot(f.detuning, 2.0 * pair.coupling);
    f.mixing = f.detuning / pair.coupling;
    f.mixing_norm = std::sqrt(0.25 * f.mixing * f.mixing + 1.0);
    if (!(f.lower_frequency() > 0.0)) {
        throw DressedFrameError("system: negative dressed frequency ω̃ − Ω̃ ≤ 0");
    }
    return f;
}

Matrix4c sigma1() {
    Matrix4c s = Matrix4c::Zero();
    s(0, 2) = 1.0;  // |gg⟩⟨eg|
    s(1, 3) = 1.0;  // |ge⟩⟨ee|
    return s;
}

Matrix4c sigma2() {
    Matrix4c s = Matrix4c::Zero();
    s(0, 1) = 1.0;  // |gg⟩⟨ge|
    s(2, 3) = 1.0;  // |eg⟩⟨ee|
    return s;
}

Matrix4c hamiltonian_matrix(const TlsPair& pair) {
    pair.validate();
    const Matrix4c s1 = sigma1();
    const Matrix4c s2 = sigma2();
    return pair.omega1 * s1.adjoint() * s1 + pair.omega2 * s2.adjoint() * s2 +
           pair.coupling * (s1.adjoint() * s2 + s2.adjoint() * s1);
}

DressedOperators dressed_operator_matrices(const TlsPair& pair) {
    const DressedFrame f = dressed_frame(pair);
    const double r = f.mixing_norm;
    const double u = f.mix_plus();
    const double w = f.mix_minus();
    const Matrix4c s1 = sigma1();
    const Matrix4c s2 = sigma2();
    const Matrix4c n1s2 = s1.adjoint() * s1 * s2;
    const Matrix4c n2s1 = s2.adjoint() * s2 * s1;
    const double k = 1.0 / (2.0 * r);

    DressedOperators ops;
    ops.A1 = k * (s1 * (0.5 * u) + s2 - 2.0 * n1s2);
    ops.B1 = k * (-s1 * (0.5 * w) - s2 + 2.0 * n1s2);
    ops.A2 = k * (s2 * (-0.5 * w) + s1 - 2.0 * n2s1);
    ops.B2 = k * (s2 * (0.5 * u) - s1 + 2.0 * n2s1);
    return ops;
}

std::vector<std::string> validity_check(const TlsPair& pair) {
    std::vector<std::string> warnings;
    const double limit = 0.1 * std::min(pair.omega1, pair.omega2);
    if (pair.coupling > limit) {
        std::ostringstream os;
        os << "rotating-wave validity: coupling " << pair.coupling << " exceeds 0.1*min(omega1, omega2) = " << limit;
        warnings.push_back(os.str());
    }
    return warnings;
}

}  // namespace tlsflow::sys

namespace tlsflow {

std::string_view to_string(Approach a) {
    switch (a) {
        case Approach::local:
            return "local";
        case Approach::global:
            return "global";
        case Approach::partial_secular:
            return "ps";
    }
    return "unknown";
}

Approach parse_approach(std::string_view name) {
    if (name == "local") return Approach::local;
    if (name == "global") return Approach::global;
    if (name == "ps") return Approach::partial_secular;
    throw std::invalid_argument("unknown approach '" + std::string(name) + "' (expected local, global or ps)");
}

}  // namespace tlsflow
