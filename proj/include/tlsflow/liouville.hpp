// liouville.hpp: Density-matrix master equations as 16×16 superoperators
//
// Vectorization stacks columns: vec(XρY) = (Yᵀ ⊗ X)·vec(ρ). The dissipator of a pair (X, Y) is
// L[X,Y]ρ = 2XρY − YXρ − ρYX.

#pragma once

#include <array>
#include <vector>

#include "tlsflow/bath.hpp"
#include "tlsflow/moments.hpp"
#include "tlsflow/system.hpp"
#include "tlsflow/types.hpp"

namespace tlsflow::liouville {

struct DensityState {
    Matrix4c rho{Matrix4c::Zero()};

    // Hermitian, unit trace and positive semidefinite, each within tol.
    bool valid(double tol = 1e-10) const;
};

struct Liouvillian {
    Matrix16c coherent{Matrix16c::Zero()};
    std::array<Matrix16c, 2> dissipative{Matrix16c::Zero(), Matrix16c::Zero()};

    Matrix16c total() const { return coherent + dissipative[0] + dissipative[1]; }
};

Matrix16c left_multiply(const Matrix4c& x);    // ρ ↦ Xρ
Matrix16c right_multiply(const Matrix4c& y);   // ρ ↦ ρY
Matrix16c lindblad(const Matrix4c& x, const Matrix4c& y);
Matrix16c commutator(const Matrix4c& x);        // ρ ↦ [X, ρ]

Vector16c vec(const Matrix4c& m);
Matrix4c unvec(const Vector16c& v);

Liouvillian build_liouvillian(Approach approach, const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                              const bath::ReservoirSpec& bath2);

// Eigenvector of the eigenvalue closest to zero, trace-normalized and hermitized.
// Throws SingularSystemError when a second eigenvalue lies within 1e-10 of zero.
DensityState steady_density(const Liouvillian& l);

double steady_density_residual(const Liouvillian& l, const DensityState& s);

struct DensityFlows {
    double J1{0.0};
    double J2{0.0};
    double coherent{0.0};  // Tr(H·L_coh[ρ]), zero up to rounding
};

// Jⱼ = Re Tr(H·L_diss[j][ρ]).
DensityFlows density_flows(const DensityState& s, const Liouvillian& l, const Matrix4c& hamiltonian);

// (⟨σ₁†σ₁⟩, ⟨σ₂†σ₂⟩, ⟨σ₁†σ₂⟩, ⟨σ₂†σ₁⟩) in ρ.
Vector4c moments_of(const DensityState& s);

// ρ(t) = exp(L·(t − t₀))ρ₀ for each requested time, t₀ being the first entry.
std::vector<DensityState> evolve_density(const Liouvillian& l, const DensityState& rho0, const std::vector<double>& times);

}  // namespace tlsflow::liouville
