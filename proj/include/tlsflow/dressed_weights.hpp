// dressed_weights.hpp: G-vectors, moment weight tables and the coefficients A, F, B, C, D, S
//
// Every coefficient of the global and partial-secular moment generators is an inner
// product (G-vector, weight vector), summed over reservoirs. G-vectors carry the bath
// correlation values at the four signed dressed frequencies; weight vectors depend only
// on the mixing parameters (y, r).
//
// Half-sided transforms: G_{j−}(ω) = G_{j+}(ω) = G_j(ω)/2, i.e. the principal-value
// (frequency-shift) parts are dropped. Consequences: PS entries are arithmetic means of G
// at two dressed frequencies, and every GL_FS vector vanishes identically.

#pragma once

#include <array>

#include "tlsflow/bath.hpp"
#include "tlsflow/system.hpp"
#include "tlsflow/types.hpp"

namespace tlsflow::weights {

enum class HalfSide { minus, plus };

// G_{j∓}(±ω) under the half-sided convention. sign as in bath::correlation_fourier.
double half_sided_fourier(const bath::ReservoirSpec& spec, double omega, int sign, HalfSide side);

struct GVectorSet {
    Vector4d gl{Vector4d::Zero()};
    Vector4d ps{Vector4d::Zero()};
    Vector4d gl_fs{Vector4d::Zero()};
    Vector4d ps_fs{Vector4d::Zero()};
};

// G-vectors for one reservoir. Throws DressedFrameError on a non-positive lower frequency.
GVectorSet build_gvectors(const sys::DressedFrame& frame, const bath::ReservoirSpec& bath);

// One weight family, indexed by reservoir (0 → bath 1, 1 → bath 2).
struct WeightFamily {
    std::array<Vector4d, 2> gl{Vector4d::Zero(), Vector4d::Zero()};
    std::array<Vector4d, 2> ps{Vector4d::Zero(), Vector4d::Zero()};
    std::array<Vector4d, 2> gl_fs{Vector4d::Zero(), Vector4d::Zero()};
    std::array<Vector4d, 2> ps_fs{Vector4d::Zero(), Vector4d::Zero()};
};

// Naming: occ1 = σ₁†σ₁, occ2 = σ₂†σ₂, coh = σ₁†σ₂. A pair (target, source moment) selects
// how the source moment feeds the target's equation; source_* families weight the free terms.
struct WeightTables {
    WeightFamily occ1_occ1;
    WeightFamily occ2_occ2;
    WeightFamily occ1_coh;
    WeightFamily occ2_coh;
    WeightFamily coh_coh;
    WeightFamily source_occ1;
    WeightFamily source_occ2;
    WeightFamily source_coh;
};

WeightTables build_weight_tables(const sys::DressedFrame& frame);

// Coefficient contributions of a single reservoir, split into secular (gl) and
// partial-secular (ps) parts.
struct ReservoirCoefficients {
    cplx a_gl{}, a_ps{};
    cplx f_gl{}, f_ps{};
    cplx b_gl{}, b_ps{};
    cplx c_gl{}, c_ps{};
    cplx d_gl{}, d_ps{};
    cplx s11_gl{}, s11_ps{};
    cplx s22_gl{}, s22_ps{};
    cplx s12_gl{}, s12_ps{};

    cplx a() const { return a_gl + a_ps; }
    cplx f() const { return f_gl + f_ps; }
    cplx b() const { return b_gl + b_ps; }
    cplx c() const { return c_gl + c_ps; }
    cplx d() const { return d_gl + d_ps; }
    cplx s11() const { return s11_gl + s11_ps; }
    cplx s22() const { return s22_gl + s22_ps; }
    cplx s12() const { return s12_gl + s12_ps; }
    cplx y() const { return 0.5 * (a() + f()) + d(); }
    cplx q() const { return b() + c(); }
    cplx t() const { return b() - c(); }
};

struct Coefficients {
    Approach mode{Approach::partial_secular};
    std::array<ReservoirCoefficients, 2> reservoir{};

    cplx a() const { return reservoir[0].a() + reservoir[1].a(); }
    cplx f() const { return reservoir[0].f() + reservoir[1].f(); }
    cplx b() const { return reservoir[0].b() + reservoir[1].b(); }
    cplx c() const { return reservoir[0].c() + reservoir[1].c(); }
    cplx d() const { return reservoir[0].d() + reservoir[1].d(); }
    cplx s11() const { return reservoir[0].s11() + reservoir[1].s11(); }
    cplx s22() const { return reservoir[0].s22() + reservoir[1].s22(); }
    cplx s12() const { return reservoir[0].s12() + reservoir[1].s12(); }
    cplx y() const { return 0.5 * (a() + f()) + d(); }
    cplx q() const { return b() + c(); }
    cplx t() const { return b() - c(); }
};

// mode = global: all PS parts and C_GL, D_GL are zero (sources use GL vectors only).
// mode = partial_secular: C_GL, D_GL are zero, everything else retained.
// mode = local is rejected with std::invalid_argument.
Coefficients assemble_coefficients(const sys::DressedFrame& frame, const bath::ReservoirSpec& bath1,
                                   const bath::ReservoirSpec& bath2, Approach mode);

}  // namespace tlsflow::weights
