// flows.cpp: Energy-flow contraction, closed forms and optimum-coupling search

#include "tlsflow/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tlsflow/optimize.hpp"
#include "tlsflow/parallel.hpp"

namespace tlsflow::flows {

namespace {

using ld = long double;

ld contract(const Eigen::Matrix<ext_cplx, 4, 1>& h, const ExtVector4c& w) { return (h.transpose() * w)(0).real(); }

ld occupation_difference(double w2, double T2, double w1, double T1) {
    // n(ω₂,T₂) − n(ω₁,T₁) without forming the two occupations separately
    const ld e1 = std::expm1(static_cast<ld>(w1) / T1);
    const ld e2 = std::expm1(static_cast<ld>(w2) / T2);
    return (e1 - e2) / (e1 * e2);
}

}  // namespace

double FlowReport::j_hot() const {
    if (hot == 1) return j2;
    return j1;
}

FlowReport stationary_flows(const moments::MomentSystem& system, const moments::MomentVector& v) {
    const ExtMatrix4c m = system.generator_ext();
    const ExtVector4c g = system.source_ext();
    const ExtVector4c r = m * v.values + g;
    const ld scale = m.norm() * v.values.norm() + g.norm();
    if (!(r.norm() <= 1e-9L * std::max<ld>(scale, 1e-300L))) {
        throw SingularSystemError("stationary_flows: moment vector is not a steady state");
    }

    const auto& p = system.pair;
    Eigen::Matrix<ext_cplx, 4, 1> h;
    h << ext_cplx(p.omega1), ext_cplx(p.omega2), ext_cplx(p.coupling), ext_cplx(p.coupling);

    std::array<ld, 2> J{};
    for (int j = 0; j < 2; ++j) {
        const ExtVector4c w = system.dissipative[j].cast<ext_cplx>() * v.values + system.source_part[j].cast<ext_cplx>();
        J[j] = contract(h, w);
    }

    FlowReport rep;
    rep.J1 = static_cast<double>(J[0]);
    rep.J2 = static_cast<double>(J[1]);
    rep.coherent_residual = static_cast<double>(contract(h, system.coherent.cast<ext_cplx>() * v.values));
    rep.first_law_residual = static_cast<double>(J[0] + J[1]);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rep.j1 = p.coupling > 0.0 ? rep.J1 / p.coupling : nan;
    rep.j2 = p.coupling > 0.0 ? rep.J2 / p.coupling : nan;
    rep.first_law_ok = std::abs(rep.first_law_residual) <=
                       kFirstLawRelTol * std::max({std::abs(rep.J1), std::abs(rep.J2), kFirstLawFloor});

    const double T1 = system.baths[0].temperature;
    const double T2 = system.baths[1].temperature;
    rep.hot = T1 > T2 ? 0 : (T2 > T1 ? 1 : -1);
    if (rep.hot >= 0) {
        const double j_in_hot = rep.hot == 0 ? rep.J1 : rep.J2;
        const double j_in_cold = rep.hot == 0 ? rep.J2 : rep.J1;
        rep.second_law_ok = j_in_hot >= -kSecondLawTol && j_in_cold <= kSecondLawTol;
    }
    return rep;
}

FlowReport steady_flows(Approach approach, const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                        const bath::ReservoirSpec& bath2) {
    const auto system = moments::build_moment_system(approach, pair, bath1, bath2);
    return stationary_flows(system, moments::steady_moments(system));
}

LocalClosedForm local_flow_closed(const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                                  const bath::ReservoirSpec& bath2) {
    pair.validate();
    const ld w1 = pair.omega1, w2 = pair.omega2, W = pair.coupling, dw = pair.detuning();
    const ld g1 = bath::relaxation_rate(bath1, pair.omega1);
    const ld g2 = bath::relaxation_rate(bath2, pair.omega2);
    const ld ga1 = bath::coupling_rate(bath1, pair.omega1);
    const ld ga2 = bath::coupling_rate(bath2, pair.omega2);
    const ld G1p = bath::correlation_fourier(bath1, pair.omega1, +1);
    const ld G1m = bath::correlation_fourier(bath1, pair.omega1, -1);
    const ld G2p = bath::correlation_fourier(bath2, pair.omega2, +1);
    const ld G2m = bath::correlation_fourier(bath2, pair.omega2, -1);
    const ld s = g1 + g2;

    const ld f = (G1p * G2m - G1m * G2p) / (4 * s);
    const ld e = g1 * g2 * (1 + dw * dw / (s * s));
    const ld p = -f * W / (e + W * W);

    LocalClosedForm out;
    out.f = static_cast<double>(f);
    out.e = static_cast<double>(e);
    out.p = static_cast<double>(p);
    out.x = static_cast<double>((2 * W * p + G1p) / (2 * g1));
    out.y = static_cast<double>((-2 * W * p + G2p) / (2 * g2));
    out.c = static_cast<double>(-dw * p / s);

    const ld dn = occupation_difference(pair.omega2, bath2.temperature, pair.omega1, bath1.temperature);
    out.J1 = static_cast<double>(-(w1 * g2 + w2 * g1) * ga1 * ga2 * W * W / (2 * s * s * (e + W * W)) * dn);
    return out;
}

double omega_max_local_closed(double g1, double g2, double detuning) {
    const double s = g1 + g2;
    return std::sqrt(g1 * g2 * (1.0 + detuning * detuning / (s * s)));
}

double global_flow_closed(const sys::TlsPair& pair, const bath::ReservoirSpec& bath1, const bath::ReservoirSpec& bath2) {
    pair.validate();
    if (pair.detuning() != 0.0) throw UnsupportedError("global_flow_closed: closed form exists only at zero detuning");
    const double w = pair.omega1;
    if (!(w - pair.coupling > 0.0)) throw DomainError("global_flow_closed: requires omega - Omega > 0");

    ld J1 = 0;
    for (double wf : {w + pair.coupling, w - pair.coupling}) {
        const ld ga1 = bath::coupling_rate(bath1, wf);
        const ld ga2 = bath::coupling_rate(bath2, wf);
        const ld n1 = 1 / std::expm1(static_cast<ld>(wf) / bath1.temperature);
        const ld n2 = 1 / std::expm1(static_cast<ld>(wf) / bath2.temperature);
        J1 += static_cast<ld>(wf) / 2 * ga1 * ga2 * (n1 - n2) / ((2 * n1 + 1) * ga1 + (2 * n2 + 1) * ga2);
    }
    return static_cast<double>(J1);
}

OptimumResult omega_max_numeric(Approach approach, const sys::TlsPair& pair_template, const bath::ReservoirSpec& bath1,
                                const bath::ReservoirSpec& bath2, double lo, double hi) {
    if (approach != Approach::local) {
        hi = std::min(hi, (1.0 - 1e-9) * std::sqrt(pair_template.omega1 * pair_template.omega2));
    }
    auto objective = [&](double W) {
        sys::TlsPair pair = pair_template;
        pair.coupling = W;
        try {
            return std::abs(steady_flows(approach, pair, bath1, bath2).j_hot());
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    const opt::LogMaximum m = opt::maximize_log(objective, lo, hi);

    OptimumResult out;
    out.omega_star = m.argmax;
    out.interior = m.interior;
    out.peaks = static_cast<int>(m.brackets.size());
    sys::TlsPair pair = pair_template;
    pair.coupling = m.argmax;
    out.j_star = steady_flows(approach, pair, bath1, bath2).j_hot();
    return out;
}

std::vector<OptimalLinePoint> optimal_line(Approach approach, const std::vector<double>& gamma1_grid,
                                           const bath::ReservoirSpec& bath1, const bath::ReservoirSpec& bath2,
                                           const sys::TlsPair& pair_template, double c2_ratio, double lo, double hi,
                                           int threads) {
    std::vector<OptimalLinePoint> out(gamma1_grid.size());
    parallel_for(gamma1_grid.size(), threads, [&](std::size_t k) {
        OptimalLinePoint& pt = out[k];
        pt.gamma1_ref = gamma1_grid[k];
        bath::ReservoirSpec b1 = bath1;
        bath::ReservoirSpec b2 = bath2;
        b1.prefactor = gamma1_grid[k] / std::pow(pair_template.omega1, b1.exponent);
        if (c2_ratio > 0.0) b2.prefactor = c2_ratio * b1.prefactor;
        try {
            pt.optimum = omega_max_numeric(approach, pair_template, b1, b2, lo, hi);
            pt.ok = true;
        } catch (const std::exception& ex) {
            pt.error = ex.what();
        }
    });
    return out;
}

bool local_violation_predicate(const sys::TlsPair& pair, double T1, double T2) {
    if (T1 == T2) return false;
    const double r1 = pair.omega1 / T1;
    const double r2 = pair.omega2 / T2;
    return T1 > T2 ? r1 > r2 : r2 > r1;
}

ThermoVerdict thermo_check(const FlowReport& report, Approach approach, const sys::TlsPair& pair,
                           const bath::ReservoirSpec& bath1, const bath::ReservoirSpec& bath2) {
    ThermoVerdict v;
    v.first_law_ok = report.first_law_ok;
    v.second_law_ok = report.second_law_ok;
    if (approach == Approach::local) {
        v.local_predicate_applies = true;
        v.local_predicate_violation =
            pair.coupling > 0.0 && local_violation_predicate(pair, bath1.temperature, bath2.temperature);
    }
    return v;
}

}  // namespace tlsflow::flows
