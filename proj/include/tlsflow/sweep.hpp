// sweep.hpp: Flat key = value configuration and CSV-producing parameter sweeps

#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlsflow/types.hpp"

namespace tlsflow::sweep {

// Invalid configuration; the message names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Values of a key: a single scalar, or a grid written min:max:count:log|lin.
struct Axis {
    std::vector<double> values;
    bool is_grid{false};

    double front() const { return values.front(); }
    double min() const;
    double max() const;
};

Axis parse_axis(const std::string& key, const std::string& text);

struct SweepConfig {
    std::vector<Approach> approaches{Approach::local, Approach::global, Approach::partial_secular};
    double omega1{1.0};
    double omega2{1.0};
    Axis Omega{};
    Axis c1{};
    double c2{0.04};
    double c2_ratio{0.0};  // when positive, c2 = c2_ratio·c1 at every point
    int n_exp{3};
    double T1{0.2};
    double T2{0.22};
    std::string output{"-"};
    int threads{1};

    double c2_for(double c1_value) const { return c2_ratio > 0.0 ? c2_ratio * c1_value : c2; }
};

// Key/value pairs from config text: one `key = value` per line, `#` starts a comment.
std::map<std::string, std::string> parse_key_values(const std::string& text);

// Defaults (two-qubit parameters c₁=0.002, c₂=0.04, n=3, T₁=0.2, T₂=0.22, ω₁=ω₂=1,
// Omega = 1e-5:0.1:64:log), then the file entries, then the overrides in order.
SweepConfig load_config(const std::string& file_text, const std::vector<std::string>& overrides);
SweepConfig make_config(const std::map<std::string, std::string>& entries);

std::string format_number(double v);  // %.17g

// Omega,approach,k,re_lambda,im_lambda: rows Ω-major, then approach, then k; curves paired along Ω.
void run_eigs(const SweepConfig& cfg, std::ostream& out);

// gamma1_ref,Omega,approach,J1,J2,j_hot,first_law_residual,second_law_ok,skipped: rows γ₁-major, then Ω, then approach.
void run_sweep(const SweepConfig& cfg, std::ostream& out);

// gamma1_ref,approach,Omega_star,j_star,bracket: Ω searched within [min Omega, max Omega].
void run_optline(const SweepConfig& cfg, std::ostream& out);

// Single-point dump; Omega and c1 must be scalars.
void run_steady(const SweepConfig& cfg, std::ostream& out);

}  // namespace tlsflow::sweep
