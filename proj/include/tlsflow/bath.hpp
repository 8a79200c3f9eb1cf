// bath.hpp: Thermal reservoir with power-law spectral coupling γ(ω) = c·ωⁿ

#pragma once

namespace tlsflow::bath {

struct ReservoirSpec {
    double temperature{1.0};  // ħ = k_B = 1
    double prefactor{1.0};    // c
    int exponent{3};          // n

    // Throws DomainError unless temperature > 0, prefactor > 0, exponent ≥ 0.
    void validate() const;
};

// Bose occupation 1/(exp(ω/T) − 1).
double mean_occupation(double omega, double temperature);

// γ(ω) = c·ωⁿ.
double coupling_rate(const ReservoirSpec& spec, double omega);

// Fourier transform of the bath correlation function at ±ω:
//   sign = +1 : G(+ω) = γ(ω)·n(ω)        (absorption)
//   sign = -1 : G(−ω) = γ(ω)·(n(ω) + 1)  (emission)
double correlation_fourier(const ReservoirSpec& spec, double omega, int sign);

// g(ω) = γ(ω)·(n(ω) + 1/2) = (G(−ω) + G(+ω))/2.
double relaxation_rate(const ReservoirSpec& spec, double omega);

}  // namespace tlsflow::bath
