// bath.cpp: Reservoir occupation numbers and rates

#include "tlsflow/bath.hpp"

#include <cmath>
#include <string>

#include "tlsflow/types.hpp"

namespace tlsflow::bath {

namespace {

void require_positive_frequency(double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("bath: frequency must be positive, got " + std::to_string(omega));
    }
}

}  // namespace

void ReservoirSpec::validate() const {
    if (!(temperature > 0.0)) throw DomainError("bath: temperature must be positive");
    if (!(prefactor > 0.0)) throw DomainError("bath: coupling prefactor must be positive");
    if (exponent < 0) throw DomainError("bath: spectral exponent must be non-negative");
}

double mean_occupation(double omega, double temperature) {
    require_positive_frequency(omega);
    if (!(temperature > 0.0)) throw DomainError("bath: temperature must be positive");
    // expm1 keeps full precision for ω ≪ T; for ω/T beyond ~709 this underflows to 0.
    return 1.0 / std::expm1(omega / temperature);
}

double coupling_rate(const ReservoirSpec& spec, double omega) {
    require_positive_frequency(omega);
    return spec.prefactor * std::pow(omega, spec.exponent);
}

double correlation_fourier(const ReservoirSpec& spec, double omega, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("bath: sign must be +1 or -1");
    const double gamma = coupling_rate(spec, omega);
    const double n = mean_occupation(omega, spec.temperature);
    return sign > 0 ? gamma * n : gamma * (n + 1.0);
}

double relaxation_rate(const ReservoirSpec& spec, double omega) {
    const double gamma = coupling_rate(spec, omega);
    return gamma * (mean_occupation(omega, spec.temperature) + 0.5);
}

}  // namespace tlsflow::bath
