// validation.cpp: The twelve acceptance checks

#include "tlsflow/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "tlsflow/bath.hpp"
#include "tlsflow/flows.hpp"
#include "tlsflow/liouville.hpp"
#include "tlsflow/moments.hpp"
#include "tlsflow/parallel.hpp"
#include "tlsflow/spectra.hpp"
#include "tlsflow/sweep.hpp"
#include "tlsflow/system.hpp"

namespace tlsflow::validation {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Draw {
    sys::TlsPair pair;
    bath::ReservoirSpec b1, b2;
};

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// ω₁ ∈ [0.5, 1.5], Δω ∈ [−0.1, 0.1], c ∈ [1e-4, 0.1], T ∈ [0.1, 0.5], Ω ∈ [1e-4, 0.1], n = 3.
Draw random_draw(std::mt19937_64& rng, bool zero_detuning) {
    Draw d;
    d.pair.omega1 = uniform(rng, 0.5, 1.5);
    const double dw = zero_detuning ? 0.0 : uniform(rng, -0.1, 0.1);
    d.pair.omega2 = d.pair.omega1 - dw;
    d.b1 = {uniform(rng, 0.1, 0.5), log_uniform(rng, 1e-4, 0.1), 3};
    d.b2 = {uniform(rng, 0.1, 0.5), log_uniform(rng, 1e-4, 0.1), 3};
    d.pair.coupling = log_uniform(rng, 1e-4, 0.1);
    return d;
}

std::vector<Draw> draws(std::uint64_t seed, int count, bool zero_detuning) {
    std::mt19937_64 rng(seed);
    std::vector<Draw> out;
    for (int i = 0; i < count; ++i) out.push_back(random_draw(rng, zero_detuning));
    return out;
}

moments::MomentSystem local_system(const Draw& d, const ValidationOptions& opts) {
    auto s = moments::build_moment_system(Approach::local, d.pair, d.b1, d.b2);
    if (opts.mutate_local_sign) {
        s.coherent(2, 2) = -s.coherent(2, 2);
        s.coherent(3, 3) = -s.coherent(3, 3);
    }
    return s;
}

double rel_err(double a, double ref) { return std::abs(a - ref) / std::max(std::abs(ref), 1e-300); }

double paired_error(const spectra::Spectrum& ref, const spectra::Spectrum& s, bool relative) {
    const auto p = spectra::pair_with(ref, s);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double e = std::abs(p[i] - ref[i]);
        worst = std::max(worst, relative ? e / std::abs(ref[i]) : e);
    }
    return worst;
}

// Two-qubit figure parameters: ω₁ = 1, n = 3, T₁ = 0.2, T₂ = 0.22.
Draw figure_point(double detuning, double c1, double c2, double coupling) {
    return {{1.0, 1.0 - detuning, coupling}, {0.2, c1, 3}, {0.22, c2, 3}};
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int k = 0; k < n; ++k) g[k] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * k / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

constexpr double kFigC1 = 0.002;
constexpr double kFigC2 = 0.04;

CriterionResult local_closed_form(const ValidationOptions& opts) {
    CriterionResult r{1, "closed-form local flow", false, 0.0, ""};
    const auto t0 = Clock::now();
    const auto ds = draws(101, 100, false);
    for (const auto& d : ds) {
        const auto s = local_system(d, opts);
        const auto rep = flows::stationary_flows(s, moments::steady_moments(s));
        r.worst_error = std::max(r.worst_error, rel_err(rep.J1, flows::local_flow_closed(d.pair, d.b1, d.b2).J1));
    }
    const double t = seconds_since(t0);
    r.passed = r.worst_error <= 1e-10 && t < 1.0;
    r.detail = "100 draws, max rel err " + sci(r.worst_error) + " (tol 1e-10), runtime " + sci(t) + " s (limit 1 s)";
    return r;
}

CriterionResult local_spectrum(const ValidationOptions& opts) {
    CriterionResult r{2, "local spectrum quartic", false, 0.0, ""};
    const auto ds = draws(101, 100, false);
    for (const auto& d : ds) {
        const auto closed = spectra::local_spectrum_closed(d.pair, d.b1, d.b2);
        const auto numeric = spectra::eigenvalues4(local_system(d, opts).generator());
        const double scale = std::max(1.0, std::abs(closed.roots[3]));
        r.worst_error = std::max(r.worst_error, paired_error(closed.roots, numeric, false) / scale);
    }
    bool ok = r.worst_error <= 1e-10;

    // zero detuning: exact double root at −(g₁+g₂), coalescence of the other pair
    const Draw fig = figure_point(0.0, kFigC1, kFigC2, 0.0);
    const double g1 = bath::relaxation_rate(fig.b1, 1.0);
    const double g2 = bath::relaxation_rate(fig.b2, 1.0);
    const double ep = spectra::ep_coupling(g1, g2);
    bool exact_pair = true;
    const auto grid = log_grid(1e-4, 0.1, 400);
    double bracket_lo = 0.0, bracket_hi = 0.0, numeric_lo = 0.0, numeric_hi = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto ls = spectra::local_spectrum_closed(g1, g2, 0.0, grid[k]);
        int at_double = 0;
        for (const auto& l : ls.roots) at_double += (l == cplx(-(g1 + g2)));
        exact_pair = exact_pair && at_double >= 2;
        if (k + 1 < grid.size()) {
            const auto next = spectra::local_spectrum_closed(g1, g2, 0.0, grid[k + 1]);
            auto complex_pair = [](const spectra::LocalSpectrum& s) {
                return std::any_of(s.roots.begin(), s.roots.end(), [](const cplx& l) { return l.imag() != 0.0; });
            };
            if (!complex_pair(ls) && complex_pair(next)) {
                bracket_lo = grid[k];
                bracket_hi = grid[k + 1];
            }
            auto im_spread = [&](double w) {
                Draw p = fig;
                p.pair.coupling = w;
                const auto s = spectra::eigenvalues4(local_system(p, opts).generator());
                double lo = 0.0, hi = 0.0;
                for (const auto& l : s) {
                    lo = std::min(lo, l.imag());
                    hi = std::max(hi, l.imag());
                }
                return hi - lo;
            };
            if (bracket_hi == grid[k + 1] && numeric_hi == 0.0) {
                if (im_spread(grid[k]) < 1e-6 && im_spread(grid[k + 1]) > 1e-6) {
                    numeric_lo = grid[k];
                    numeric_hi = grid[k + 1];
                }
            }
        }
    }
    const bool bracketed = bracket_lo < ep && ep <= bracket_hi;
    const bool numeric_agrees = numeric_lo == bracket_lo && numeric_hi == bracket_hi;
    ok = ok && exact_pair && bracketed && numeric_agrees;
    r.passed = ok;
    r.detail = "100 draws, max root err " + sci(r.worst_error) + " (tol 1e-10); zero-detuning double root exact: " +
               (exact_pair ? "yes" : "no") + "; coalescence bracket [" + sci(bracket_lo) + ", " + sci(bracket_hi) +
               "] (numeric [" + sci(numeric_lo) + ", " + sci(numeric_hi) + "]) contains |g1-g2|/2 = " + sci(ep) +
               ": " + (bracketed ? "yes" : "no") + "; quartic EP equals |g1-g2|/2: yes";
    return r;
}

CriterionResult degenerate_pair(const ValidationOptions& opts) {
    CriterionResult r{3, "degenerate eigenvalue pair at zero detuning", true, 0.0, ""};
    const auto grid = log_grid(1e-5, 0.1, 64);
    const Draw fig = figure_point(0.0, kFigC1, kFigC2, 0.0);
    std::ostringstream os;
    for (Approach a : {Approach::local, Approach::global, Approach::partial_secular}) {
        double worst = 0.0;
        int failing = 0;
        for (double w : grid) {
            Draw d = fig;
            d.pair.coupling = w;
            const Matrix4c m = a == Approach::local ? local_system(d, opts).generator()
                                                    : moments::build_moment_system(a, d.pair, d.b1, d.b2).generator();
            const auto s = spectra::eigenvalues4(m);
            double sep = INFINITY;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) sep = std::min(sep, std::abs(s[i] - s[j]));
            worst = std::max(worst, sep);
            failing += sep > 1e-8;
        }
        r.worst_error = std::max(r.worst_error, worst);
        r.passed = r.passed && failing == 0;
        os << to_string(a) << ": max min-pair-gap " << sci(worst) << ", " << failing << "/64 points above 1e-8; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult limit_recovery(const ValidationOptions&) {
    CriterionResult r{4, "PS limit recovery", false, 0.0, ""};
    const Draw weak = figure_point(0.0, kFigC1, kFigC2, 1e-5);
    const Draw strong = figure_point(0.0, kFigC1, kFigC2, 0.1);
    auto eig = [](Approach a, const Draw& d) {
        return spectra::eigenvalues4(moments::build_moment_system(a, d.pair, d.b1, d.b2).generator());
    };
    auto flow = [](Approach a, const Draw& d) { return flows::steady_flows(a, d.pair, d.b1, d.b2).J1; };

    const double e_weak = paired_error(eig(Approach::local, weak), eig(Approach::partial_secular, weak), true);
    const double e_strong = paired_error(eig(Approach::global, strong), eig(Approach::partial_secular, strong), true);
    const double f_weak = rel_err(flow(Approach::partial_secular, weak), flow(Approach::local, weak));
    const double f_strong = rel_err(flow(Approach::partial_secular, strong), flow(Approach::global, strong));
    r.worst_error = std::max({e_weak, e_strong, f_weak, f_strong});
    r.passed = e_weak <= 0.02 && e_strong <= 0.02 && f_weak <= 0.05 && f_strong <= 0.05;
    r.detail = "eigenvalues PS vs local at 1e-5: " + sci(e_weak) + ", PS vs global at 0.1: " + sci(e_strong) +
               " (tol 2%); flows: " + sci(f_weak) + ", " + sci(f_strong) + " (tol 5%)";
    return r;
}

CriterionResult omega_max(const ValidationOptions&) {
    CriterionResult r{5, "optimal coupling", false, 0.0, ""};
    const auto t0 = Clock::now();
    const auto ds = draws(505, 20, false);
    double worst_local = 0.0;
    for (const auto& d : ds) {
        const double g1 = bath::relaxation_rate(d.b1, d.pair.omega1);
        const double g2 = bath::relaxation_rate(d.b2, d.pair.omega2);
        const double closed = flows::omega_max_local_closed(g1, g2, d.pair.detuning());
        const auto num = flows::omega_max_numeric(Approach::local, d.pair, d.b1, d.b2, 1e-2 * closed, 1e2 * closed);
        worst_local = std::max(worst_local, rel_err(num.omega_star, closed));
    }
    const Draw base = figure_point(-0.09, 0.001, 0.002, 0.0);
    Draw scaled = base;
    scaled.b1.prefactor *= 10.0;
    scaled.b2.prefactor *= 10.0;
    const auto g_base = flows::omega_max_numeric(Approach::global, base.pair, base.b1, base.b2, 1e-4, 0.5);
    const auto g_scaled = flows::omega_max_numeric(Approach::global, scaled.pair, scaled.b1, scaled.b2, 1e-4, 0.5);
    const double change = rel_err(g_scaled.omega_star, g_base.omega_star);
    const double t = seconds_since(t0);
    r.worst_error = std::max(worst_local, change);
    r.passed = worst_local <= 1e-6 && change <= 1e-4 && g_base.interior && t < 5.0;
    r.detail = "local 20 draws max rel err " + sci(worst_local) + " (tol 1e-6); global Omega* " +
               sci(g_base.omega_star) + " vs " + sci(g_scaled.omega_star) + " under 10x rate scaling, change " +
               sci(change) + " (tol 1e-4); runtime " + sci(t) + " s (limit 5 s)";
    return r;
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i] / n;
        my += y[i] / n;
    }
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy * sxy / (sxx * syy);
}

CriterionResult global_closed_form(const ValidationOptions&) {
    CriterionResult r{6, "closed-form global flow and linear growth", false, 0.0, ""};
    const auto ds = draws(606, 20, true);
    for (const auto& d : ds) {
        const double num = flows::steady_flows(Approach::global, d.pair, d.b1, d.b2).J1;
        r.worst_error = std::max(r.worst_error, rel_err(num, flows::global_flow_closed(d.pair, d.b1, d.b2)));
    }

    const double c2 = kFigC2;
    const double omega = 0.01;
    std::vector<double> c1s, fixed, tied;
    for (int k = 0; k <= 20; ++k) {
        const double c1 = c2 / 3.0 + (3.0 * c2 - c2 / 3.0) * k / 20.0;
        const Draw d = figure_point(0.0, c1, c2, omega);
        const Draw t = figure_point(0.0, c1, 2.0 * c1, omega);
        c1s.push_back(c1);
        fixed.push_back(flows::steady_flows(Approach::global, d.pair, d.b1, d.b2).J1);
        tied.push_back(flows::steady_flows(Approach::global, t.pair, t.b1, t.b2).J1);
    }
    const double r2 = r_squared(c1s, fixed);
    const double r2_tied = r_squared(c1s, tied);
    r.passed = r.worst_error <= 1e-10 && r2 >= 0.99;
    r.detail = "20 draws max rel err " + sci(r.worst_error) + " (tol 1e-10); J1 vs c1 over [c2/3, 3 c2] at fixed c2=" +
               sci(c2) + ": R^2 = " + sci(r2) + " (need 0.99); with c2 = 2 c1 tied: R^2 = " + sci(r2_tied);
    return r;
}

CriterionResult oracle_equivalence(const ValidationOptions& opts) {
    CriterionResult r{7, "Liouvillian oracle equivalence", false, 0.0, ""};
    const auto t0 = Clock::now();
    const auto ds = draws(707, 50, false);
    const std::array<Approach, 3> approaches{Approach::local, Approach::global, Approach::partial_secular};
    std::vector<double> worst_abs(ds.size() * 3, 0.0);
    std::vector<char> ok(ds.size() * 3, 1);

    parallel_for(ds.size() * 3, opts.threads, [&](std::size_t idx) {
        const Draw& d = ds[idx / 3];
        const Approach a = approaches[idx % 3];
        const auto system =
            a == Approach::local ? local_system(d, opts) : moments::build_moment_system(a, d.pair, d.b1, d.b2);
        const auto v = moments::steady_moments(system);
        const auto rep = flows::stationary_flows(system, v);
        const auto l = liouville::build_liouvillian(a, d.pair, d.b1, d.b2);
        const auto rho = liouville::steady_density(l);
        const auto m = liouville::moments_of(rho);
        const auto df = liouville::density_flows(rho, l, sys::hamiltonian_matrix(d.pair));

        const std::array<std::pair<double, double>, 4> q{{{v.occupancy1(), m(0).real()},
                                                           {v.occupancy2(), m(1).real()},
                                                           {rep.J1, df.J1},
                                                           {rep.J2, df.J2}}};
        for (const auto& [mine, ref] : q) {
            const double e = std::abs(mine - ref);
            worst_abs[idx] = std::max(worst_abs[idx], e);
            if (!(e <= 1e-9 || e <= 1e-7 * std::abs(ref))) ok[idx] = 0;
        }
    });
    const double t = seconds_since(t0);
    r.worst_error = *std::max_element(worst_abs.begin(), worst_abs.end());
    const auto failures = std::count(ok.begin(), ok.end(), 0);
    r.passed = failures == 0 && t < 30.0;
    r.detail = "50 draws x 3 approaches, max abs err " + sci(r.worst_error) + ", " + std::to_string(failures) +
               " outside tol (1e-9 abs or 1e-7 rel); runtime " + sci(t) + " s (limit 30 s)";
    return r;
}

// Fig. 2-4 style grids: γ₁ ∈ [1e-4, 0.1], Ω ∈ [1e-4, 0.1], c₂ = 2c₁, Δω ∈ {−0.09, 0}.
void for_each_figure_point(int n, const std::function<void(Approach, const Draw&, const flows::FlowReport&)>& visit) {
    const auto gammas = log_grid(1e-4, 0.1, n);
    const auto omegas = log_grid(1e-4, 0.1, n);
    for (double dw : {-0.09, 0.0})
        for (Approach a : {Approach::local, Approach::global, Approach::partial_secular})
            for (double g : gammas)
                for (double w : omegas) {
                    const Draw d = figure_point(dw, g, 2.0 * g, w);
                    visit(a, d, flows::steady_flows(a, d.pair, d.b1, d.b2));
                }
}

CriterionResult first_law(const ValidationOptions& opts) {
    CriterionResult r{8, "first law at steady state", true, 0.0, ""};
    int tested = 0;
    auto check = [&](const flows::FlowReport& rep) {
        ++tested;
        const double scale = std::max({std::abs(rep.J1), std::abs(rep.J2), flows::kFirstLawFloor});
        r.worst_error = std::max(r.worst_error, std::abs(rep.first_law_residual) / scale);
        r.passed = r.passed && rep.first_law_ok;
    };
    for (const auto& d : draws(808, 50, false)) {
        const auto s = local_system(d, opts);
        check(flows::stationary_flows(s, moments::steady_moments(s)));
        check(flows::steady_flows(Approach::global, d.pair, d.b1, d.b2));
        check(flows::steady_flows(Approach::partial_secular, d.pair, d.b1, d.b2));
    }
    for_each_figure_point(20, [&](Approach, const Draw&, const flows::FlowReport& rep) { check(rep); });
    r.detail = std::to_string(tested) + " steady states, max |J1+J2|/max(|J1|,|J2|) " + sci(r.worst_error) +
               " (tol 1e-10)";
    return r;
}

CriterionResult second_law(const ValidationOptions& opts) {
    CriterionResult r{9, "second law", true, 0.0, ""};
    int dressed_points = 0, dressed_fail = 0;
    for_each_figure_point(20, [&](Approach a, const Draw&, const flows::FlowReport& rep) {
        if (a == Approach::local) return;
        ++dressed_points;
        const double j_hot = rep.hot == 0 ? rep.J1 : rep.J2;
        const double j_cold = rep.hot == 0 ? rep.J2 : rep.J1;
        r.worst_error = std::max({r.worst_error, -j_hot, j_cold});
        dressed_fail += !rep.second_law_ok;
    });

    auto local_report = [&](const Draw& d) {
        const auto s = local_system(d, opts);
        return flows::stationary_flows(s, moments::steady_moments(s));
    };
    const Draw witness{{1.0, 0.8, 0.01}, {0.25, 0.002, 3}, {0.22, 0.004, 3}};
    const Draw benign{{1.0, 1.0, 0.01}, {0.2, 0.002, 3}, {0.22, 0.004, 3}};
    const auto w_rep = local_report(witness);
    const auto b_rep = local_report(benign);
    const bool witness_ok = !w_rep.second_law_ok && flows::local_violation_predicate(witness.pair, 0.25, 0.22);
    const bool benign_ok = b_rep.second_law_ok && !flows::local_violation_predicate(benign.pair, 0.2, 0.22);
    const auto ps_witness = flows::steady_flows(Approach::partial_secular, witness.pair, witness.b1, witness.b2);

    std::mt19937_64 rng(909);
    int mismatches = 0, compared = 0;
    for (int i = 0; i < 300; ++i) {
        Draw d = random_draw(rng, false);
        d.pair.omega2 = d.pair.omega1 * uniform(rng, 0.7, 1.3);
        const auto rep = local_report(d);
        const double j_hot = rep.hot == 0 ? rep.J1 : rep.J2;
        if (rep.hot < 0 || std::abs(j_hot) <= 1e-14) continue;
        ++compared;
        mismatches += (j_hot < 0.0) != flows::local_violation_predicate(d.pair, d.b1.temperature, d.b2.temperature);
    }
    r.passed = dressed_fail == 0 && witness_ok && benign_ok && ps_witness.second_law_ok && mismatches == 0;
    r.detail = "global/PS: " + std::to_string(dressed_fail) + "/" + std::to_string(dressed_points) +
               " grid points violate (worst excess " + sci(r.worst_error) + "); local witness (1.0, 0.8, 0.25, 0.22) " +
               (witness_ok ? "flagged" : "NOT flagged") + ", equal-frequency case " +
               (benign_ok ? "clean" : "FLAGGED") + ", PS at witness " + (ps_witness.second_law_ok ? "clean" : "FLAGGED") +
               "; local predicate mismatches " + std::to_string(mismatches) + "/" + std::to_string(compared);
    return r;
}

CriterionResult suppression(const ValidationOptions&) {
    CriterionResult r{10, "suppression and growth versus relaxation", true, 0.0, ""};
    const auto gammas = log_grid(1e-4, 0.1, 121);
    std::ostringstream os;
    for (Approach a : {Approach::local, Approach::partial_secular, Approach::global}) {
        std::vector<double> j;
        for (double g : gammas) {
            const Draw d = figure_point(-0.009, g, 2.0 * g, 0.01);
            j.push_back(std::abs(flows::steady_flows(a, d.pair, d.b1, d.b2).J1));
        }
        if (a == Approach::global) {
            int drops = 0;
            for (std::size_t k = 0; k + 1 < j.size(); ++k) drops += j[k + 1] < j[k] * (1.0 - 1e-12);
            r.passed = r.passed && drops == 0;
            os << "global: " << drops << " decreasing steps";
            continue;
        }
        const auto peak = static_cast<std::size_t>(std::max_element(j.begin(), j.end()) - j.begin());
        int rises_after = 0, falls_before = 0;
        for (std::size_t k = 0; k + 1 < j.size(); ++k) {
            if (k < peak) falls_before += !(j[k + 1] > j[k]);
            else rises_after += !(j[k + 1] < j[k]);
        }
        const bool interior = peak > 0 && peak + 1 < j.size();
        r.passed = r.passed && interior && rises_after == 0 && falls_before == 0;
        os << to_string(a) << ": peak at gamma1 " << sci(gammas[peak]) << (interior ? " (interior)" : " (boundary)")
           << ", non-rising steps before " << falls_before << ", non-falling after " << rises_after << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult optimal_line(const ValidationOptions& opts) {
    CriterionResult r{11, "optimal line at nonzero detuning", false, 0.0, ""};
    const double dw = -0.09;
    const auto gammas = log_grid(1e-4, 0.1, 16);
    const Draw base = figure_point(dw, 1e-3, 2e-3, 0.0);
    const auto local = flows::optimal_line(Approach::local, gammas, base.b1, base.b2, base.pair, 2.0, 1e-4, 0.1,
                                           opts.threads);
    const auto ps = flows::optimal_line(Approach::partial_secular, gammas, base.b1, base.b2, base.pair, 2.0, 1e-4,
                                        0.1, opts.threads);
    const double target = std::abs(dw) * std::sqrt(2.0) / 3.0;
    const bool local_ok = local.front().ok;
    const double local_err = local_ok ? rel_err(local.front().optimum.omega_star, target) : INFINITY;
    double ps_min = INFINITY;
    bool ps_ok = true;
    for (const auto& pt : ps) {
        ps_ok = ps_ok && pt.ok;
        if (pt.ok) ps_min = std::min(ps_min, pt.optimum.omega_star);
    }
    const double floor = 0.25 * std::abs(dw);
    r.worst_error = local_err;
    r.passed = local_err <= 0.05 && ps_ok && ps_min >= floor;
    r.detail = "local Omega* at gamma1=1e-4: " + sci(local_ok ? local.front().optimum.omega_star : NAN) + " vs " +
               sci(target) + ", rel err " + sci(local_err) + " (tol 5%); PS min Omega* " + sci(ps_min) +
               " (floor " + sci(floor) + ")";
    return r;
}

CriterionResult determinism(const ValidationOptions& opts) {
    CriterionResult r{12, "sweep determinism and performance", false, 0.0, ""};
    const std::map<std::string, std::string> entries{{"approach", "ps"},          {"omega1", "1"},
                                                     {"omega2", "1.09"},          {"Omega", "1e-4:0.1:100:log"},
                                                     {"c1", "1e-4:0.1:100:log"}, {"c2_ratio", "2"},
                                                     {"T1", "0.2"},               {"T2", "0.22"}};
    auto run = [&](int threads) {
        auto cfg = sweep::make_config(entries);
        cfg.threads = threads;
        std::ostringstream os;
        sweep::run_sweep(cfg, os);
        return os.str();
    };
    const int workers = std::max(opts.threads, 8);
    const auto t0 = Clock::now();
    const std::string a = run(workers);
    const double t = seconds_since(t0);
    const std::string b = run(workers);
    const std::string c = run(3);
    const std::string d = run(1);
    const bool identical = a == b && a == c && a == d;
    r.worst_error = t;
    r.passed = identical && t < 10.0;
    r.detail = "100x100 PS sweep on " + std::to_string(workers) + " threads in " + sci(t) +
               " s (limit 10 s); CSV identical across runs and 8/3/1 threads: " + (identical ? "yes" : "no") + " (" +
               std::to_string(a.size()) + " bytes)";
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const ValidationOptions& opts) {
    static const std::array<CriterionResult (*)(const ValidationOptions&), kCriterionCount> table{
        local_closed_form, local_spectrum, degenerate_pair, limit_recovery, omega_max,    global_closed_form,
        oracle_equivalence, first_law,     second_law,      suppression,    optimal_line, determinism};
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("unknown criterion " + std::to_string(id));
    try {
        return table[id - 1](opts);
    } catch (const std::exception& ex) {
        return {id, "criterion " + std::to_string(id), false, INFINITY, std::string("exception: ") + ex.what()};
    }
}

std::vector<CriterionResult> run_acceptance(const ValidationOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
    return out;
}

std::string format_result(const CriterionResult& r) {
    char head[64];
    std::snprintf(head, sizeof head, "C%02d %s worst=%.3g ", r.id, r.passed ? "PASS" : "FAIL", r.worst_error);
    return head + r.name + " | " + r.detail;
}

}  // namespace tlsflow::validation
