// flows.hpp: Stationary energy flows, closed forms, optimum coupling and thermodynamic checks
//
// Sign convention: Jⱼ > 0 means energy enters the system from reservoir j.

#pragma once

#include <string>
#include <vector>

#include "tlsflow/bath.hpp"
#include "tlsflow/moments.hpp"
#include "tlsflow/system.hpp"
#include "tlsflow/types.hpp"

namespace tlsflow::flows {

inline constexpr double kFirstLawRelTol = 1e-10;
inline constexpr double kFirstLawFloor = 1e-30;
inline constexpr double kSecondLawTol = 1e-12;

struct FlowReport {
    double J1{0.0};
    double J2{0.0};
    double j1{0.0};  // J1/Ω (NaN at Ω = 0)
    double j2{0.0};
    double first_law_residual{0.0};  // J1 + J2
    bool first_law_ok{true};
    bool second_law_ok{true};
    int hot{-1};                  // 0 or 1 for the hotter reservoir, −1 at equal temperatures
    double coherent_residual{0.0};  // h·(M_coh v), zero up to rounding

    double j_hot() const;  // specific flow from the hot reservoir (J_hot/Ω); j1 at equal temperatures
};

// Jⱼ = h·(M_res[j]·v + G_res[j]) with h = (ω₁, ω₂, Ω, Ω), evaluated in extended precision.
// Throws SingularSystemError when v is not a steady state of the system.
FlowReport stationary_flows(const moments::MomentSystem& system, const moments::MomentVector& v);

// Builds the system, solves for the steady state and returns its flows.
FlowReport steady_flows(Approach approach, const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                        const bath::ReservoirSpec& bath2);

struct LocalClosedForm {
    double J1{0.0};
    double x{0.0};  // ⟨σ₁†σ₁⟩
    double y{0.0};  // ⟨σ₂†σ₂⟩
    double c{0.0};  // Re⟨σ₁†σ₂⟩
    double p{0.0};  // Im⟨σ₁†σ₂⟩
    double f{0.0};
    double e{0.0};
};

LocalClosedForm local_flow_closed(const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                                  const bath::ReservoirSpec& bath2);

// √(g₁g₂(1 + Δω²/(g₁+g₂)²)).
double omega_max_local_closed(double g1, double g2, double detuning);

// Zero-detuning global flow J1 from the symmetric/antisymmetric dressed modes at ω ± Ω.
// UnsupportedError for Δω ≠ 0, DomainError for ω − Ω ≤ 0.
double global_flow_closed(const sys::TlsPair& pair, const bath::ReservoirSpec& bath1, const bath::ReservoirSpec& bath2);

struct OptimumResult {
    double omega_star{0.0};
    double j_star{0.0};  // signed j_hot at Ω*
    bool interior{false};
    int peaks{0};
};

// Maximizes |j_hot| over Ω ∈ [lo, hi] (64-point log grid, then golden section to 1e-10 in log Ω).
// For global/PS the upper bound is pulled below √(ω₁ω₂), where the lower dressed frequency vanishes.
OptimumResult omega_max_numeric(Approach approach, const sys::TlsPair& pair_template, const bath::ReservoirSpec& bath1,
                                const bath::ReservoirSpec& bath2, double lo, double hi);

struct OptimalLinePoint {
    double gamma1_ref{0.0};  // γ₁(ω₁) = c₁ω₁ⁿ
    OptimumResult optimum{};
    bool ok{false};
    std::string error;
};

// For each γ₁(ω₁) in the grid: c₁ = γ₁/ω₁ⁿ, and c₂ = c2_ratio·c₁ when c2_ratio > 0 (otherwise the
// template's c₂ is kept). Points run in parallel; output follows grid order.
std::vector<OptimalLinePoint> optimal_line(Approach approach, const std::vector<double>& gamma1_grid,
                                           const bath::ReservoirSpec& bath1, const bath::ReservoirSpec& bath2,
                                           const sys::TlsPair& pair_template, double c2_ratio, double lo, double hi,
                                           int threads = 1);

struct ThermoVerdict {
    bool first_law_ok{true};
    bool second_law_ok{true};
    bool local_predicate_applies{false};
    bool local_predicate_violation{false};  // sign(J1) = −sign(e^{ω₁/T₁} − e^{ω₂/T₂}) puts J_hot < 0
};

ThermoVerdict thermo_check(const FlowReport& report, Approach approach, const sys::TlsPair& pair,
                           const bath::ReservoirSpec& bath1, const bath::ReservoirSpec& bath2);

// True when the local closed form predicts energy leaving the system into the hotter reservoir:
// T₁ ≠ T₂ and the hotter side has the larger ωⱼ/Tⱼ.
bool local_violation_predicate(const sys::TlsPair& pair, double T1, double T2);

}  // namespace tlsflow::flows
