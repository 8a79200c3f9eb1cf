// types.hpp: Shared matrix aliases, approach tags and error types

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace tlsflow {

using cplx = std::complex<double>;
using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Vector4c = Eigen::Matrix<cplx, 4, 1>;
using Vector4d = Eigen::Vector4d;
using Matrix16c = Eigen::Matrix<cplx, 16, 16>;
using Vector16c = Eigen::Matrix<cplx, 16, 1>;

using ext_real = long double;
using ext_cplx = std::complex<long double>;
using ExtVector4c = Eigen::Matrix<ext_cplx, 4, 1>;
using ExtMatrix4c = Eigen::Matrix<ext_cplx, 4, 4>;

enum class Approach { local, global, partial_secular };

std::string_view to_string(Approach a);
Approach parse_approach(std::string_view name);  // "local" | "global" | "ps"

// Argument outside the domain of a physical formula (ω ≤ 0, T ≤ 0, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Dressed quantities requested where they do not exist (Ω = 0 or ω̃ − Ω̃ ≤ 0).
struct DressedFrameError : DomainError {
    using DomainError::DomainError;
};

// Moment generator or Liouvillian without a unique stationary state.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed form requested outside the parameter set it exists for.
struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace tlsflow
