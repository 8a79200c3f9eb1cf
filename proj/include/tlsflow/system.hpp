// system.hpp: Two coupled two-level systems: bare and dressed parameters, operator matrices
//
// Product basis is fixed to {|gg⟩, |ge⟩, |eg⟩, |ee⟩} with TLS 1 as the first factor,
// σ = |g⟩⟨e|, σ₁ = σ⊗I, σ₂ = I⊗σ. Every matrix in the library uses this ordering.

#pragma once

#include <string>
#include <vector>

#include "tlsflow/types.hpp"

namespace tlsflow::sys {

struct TlsPair {
    double omega1{1.0};
    double omega2{1.0};
    double coupling{0.0};  // Rabi constant Ω

    double detuning() const { return omega1 - omega2; }
    void validate() const;  // ω₁, ω₂ > 0 and Ω ≥ 0, else DomainError
};

struct DressedFrame {
    double detuning{0.0};        // Δω = ω₁ − ω₂
    double mean_frequency{0.0};  // ω̃ = (ω₁ + ω₂)/2
    double half_splitting{0.0};  // Ω̃ = √(Δω² + 4Ω²)/2
    double mixing{0.0};          // y = Δω/Ω
    double mixing_norm{1.0};     // r = √(y²/4 + 1)

    double lower_frequency() const { return mean_frequency - half_splitting; }

    // y + 2r and y − 2r; the one that cancels is taken from (2r + y)(2r − y) = 4.
    double mix_plus() const { return mixing >= 0.0 ? mixing + 2.0 * mixing_norm : 4.0 / (2.0 * mixing_norm - mixing); }
    double mix_minus() const { return mixing <= 0.0 ? mixing - 2.0 * mixing_norm : -4.0 / (2.0 * mixing_norm + mixing); }
    double upper_frequency() const { return mean_frequency + half_splitting; }
};

// Throws DressedFrameError for Ω = 0 or a non-positive lower dressed frequency.
DressedFrame dressed_frame(const TlsPair& pair);

Matrix4c sigma1();
Matrix4c sigma2();

// ω₁σ₁†σ₁ + ω₂σ₂†σ₂ + Ω(σ₁†σ₂ + σ₂†σ₁).
Matrix4c hamiltonian_matrix(const TlsPair& pair);

// Eigen-operators of H: A at frequency ω̃+Ω̃, B at ω̃−Ω̃, with Aⱼ + Bⱼ = σⱼ.
struct DressedOperators {
    Matrix4c A1, B1, A2, B2;
};

DressedOperators dressed_operator_matrices(const TlsPair& pair);

// Rotating-wave validity: Ω ≤ 0.1·min(ω₁, ω₂). Returns human-readable warnings.
std::vector<std::string> validity_check(const TlsPair& pair);

}  // namespace tlsflow::sys
