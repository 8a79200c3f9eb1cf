// moments.hpp: Moment-equation generators dv/dt = M·v + G for the local, global and PS approaches
//
// v = (⟨σ₁†σ₁⟩, ⟨σ₂†σ₂⟩, ⟨σ₁†σ₂⟩, ⟨σ₂†σ₁⟩). M splits into a coherent part (the ±iΩ, ±iΔω
// entries) and one dissipative part per reservoir; G splits per reservoir.

#pragma once

#include <array>
#include <vector>

#include "tlsflow/bath.hpp"
#include "tlsflow/system.hpp"
#include "tlsflow/types.hpp"

namespace tlsflow::moments {

struct MomentVector {
    ExtVector4c values{ExtVector4c::Zero()};

    MomentVector() = default;
    explicit MomentVector(const ExtVector4c& v) : values(v) {}
    explicit MomentVector(const Vector4c& v) : values(v.cast<ext_cplx>()) {}

    double occupancy1() const { return static_cast<double>(values(0).real()); }
    double occupancy2() const { return static_cast<double>(values(1).real()); }
    cplx coherence() const {
        return {static_cast<double>(values(2).real()), static_cast<double>(values(2).imag())};
    }
    Vector4c to_double() const;

    // Occupancies real and in [0, 1], component 4 = conj(component 3), all within tol.
    bool satisfies_invariants(double tol = 1e-10) const;
};

struct MomentSystem {
    Approach approach{Approach::local};
    sys::TlsPair pair{};
    std::array<bath::ReservoirSpec, 2> baths{};

    Matrix4c coherent{Matrix4c::Zero()};
    std::array<Matrix4c, 2> dissipative{Matrix4c::Zero(), Matrix4c::Zero()};
    std::array<Vector4c, 2> source_part{Vector4c::Zero(), Vector4c::Zero()};

    Matrix4c generator() const { return coherent + dissipative[0] + dissipative[1]; }
    Vector4c source() const { return source_part[0] + source_part[1]; }

    // Same sums formed in extended precision, consistent with the per-reservoir split to rounding of long double.
    ExtMatrix4c generator_ext() const;
    ExtVector4c source_ext() const;
};

// Coherent part shared by all approaches.
Matrix4c coherent_generator(const sys::TlsPair& pair);

// Local allows Ω ≥ 0; global/PS need Ω > 0 and ω̃ − Ω̃ > 0 (DressedFrameError otherwise).
// Zero coupling prefactors are accepted here and rejected by steady_moments.
MomentSystem build_moment_system(Approach approach, const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                                 const bath::ReservoirSpec& bath2);

// Solves M·v + G = 0 by partial-pivoting LU in extended precision with one refinement step.
// Throws SingularSystemError when the reciprocal condition estimate drops below 1e-12.
MomentVector steady_moments(const MomentSystem& system);

// Residual ‖M·v + G‖ evaluated in extended precision.
double steady_residual(const MomentSystem& system, const MomentVector& v);

// Exact affine propagation v(t) = exp(M t)·v0 + ∫ exp(M s) G ds, via the 5×5 augmented exponential.
std::vector<Vector4c> evolve_moments(const MomentSystem& system, const Vector4c& v0, const std::vector<double>& times);

}  // namespace tlsflow::moments
