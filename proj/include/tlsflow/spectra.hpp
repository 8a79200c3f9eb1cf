// spectra.hpp: Eigenvalue analysis of the moment generators
//
// Closed-form local spectrum from the characteristic quartic
//   (2g₁+λ)(2g₂+λ)((g₁+g₂+λ)² + Δω²) + 4Ω²(g₁+g₂+λ)² = 0,
// exceptional-point location, and coupling scans with stable eigenvalue pairing.

#pragma once

#include <array>
#include <vector>

#include "tlsflow/bath.hpp"
#include "tlsflow/system.hpp"
#include "tlsflow/types.hpp"

namespace tlsflow::spectra {

using Spectrum = std::array<cplx, 4>;

// Numeric eigenvalues, ordered by (real, imag).
Spectrum eigenvalues4(const Matrix4c& m);

struct LocalSpectrum {
    Spectrum roots{};
    std::array<double, 5> quartic{};  // coefficients of λ⁰..λ⁴ (monic)
    bool factored{false};             // Δω = 0: double root −(g₁+g₂) taken from the factorization
};

LocalSpectrum local_spectrum_closed(double g1, double g2, double detuning, double coupling);
LocalSpectrum local_spectrum_closed(const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                                    const bath::ReservoirSpec& bath2);

// Evaluates the quartic at λ.
cplx local_quartic(const std::array<double, 5>& coeffs, cplx lambda);

// |g₁ − g₂|/2: the Δω = 0 coupling at which the non-degenerate local pair coalesces.
double ep_coupling(double g1, double g2);

struct SpectrumScan {
    Approach approach{Approach::local};
    std::vector<double> coupling;
    std::vector<Spectrum> eigenvalues;   // paired along the grid
    std::vector<double> splitting;       // max Im λ − min Im λ
    std::vector<double> min_separation;  // min pairwise |λᵢ − λⱼ|
    std::vector<bool> skipped;           // point violates dressed-frequency positivity
};

// Eigenvalue curves over a coupling grid. The pair template supplies ω₁, ω₂; its coupling is ignored.
SpectrumScan splitting_scan(Approach approach, const sys::TlsPair& pair_template, const bath::ReservoirSpec& bath1,
                            const bath::ReservoirSpec& bath2, const std::vector<double>& grid, int threads = 1);

// Reorders next so that Σ|next[π(i)] − previous[i]| is minimal over all 24 permutations.
Spectrum pair_with(const Spectrum& previous, const Spectrum& next);

// Couplings where d²s/dΩ² (three-point, non-uniform spacing) changes sign; each entry is the
// midpoint of the two nearest grid points carrying opposite-signed second derivatives.
std::vector<double> find_inflections(const std::vector<double>& grid, const std::vector<double>& values);

// True when some pair of eigenvalues agrees within tol.
bool has_degenerate_pair(const Spectrum& s, double tol);

}  // namespace tlsflow::spectra
