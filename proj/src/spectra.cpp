// spectra.cpp: Quartic roots, numeric spectra and coupling scans

#include "tlsflow/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "tlsflow/moments.hpp"
#include "tlsflow/parallel.hpp"

namespace tlsflow::spectra {

namespace {

void sort_spectrum(Spectrum& s) {
    std::sort(s.begin(), s.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

// Newton steps in extended precision on the monic quartic; keeps a step only if |P| drops.
cplx polish_root(const std::array<double, 5>& c, cplx root) {
    using lc = std::complex<long double>;
    auto eval = [&](lc x, lc& dp) {
        lc p = c[4];
        dp = 0;
        for (int k = 3; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + static_cast<long double>(c[k]);
        }
        return p;
    };
    lc x(root.real(), root.imag());
    lc dp;
    lc p = eval(x, dp);
    for (int it = 0; it < 8; ++it) {
        if (std::abs(dp) == 0.0L) break;
        const lc trial = x - p / dp;
        lc dtrial;
        const lc ptrial = eval(trial, dtrial);
        if (!(std::abs(ptrial) < std::abs(p))) break;
        x = trial;
        p = ptrial;
        dp = dtrial;
    }
    return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

}  // namespace

Spectrum eigenvalues4(const Matrix4c& m) {
    Eigen::ComplexEigenSolver<Matrix4c> es(m, /*computeEigenvectors=*/false);
    Spectrum s;
    for (int i = 0; i < 4; ++i) s[i] = es.eigenvalues()(i);
    sort_spectrum(s);
    return s;
}

cplx local_quartic(const std::array<double, 5>& coeffs, cplx lambda) {
    cplx p = coeffs[4];
    for (int k = 3; k >= 0; --k) p = p * lambda + coeffs[k];
    return p;
}

LocalSpectrum local_spectrum_closed(double g1, double g2, double detuning, double coupling) {
    const double s = g1 + g2;
    const double w2 = coupling * coupling;
    const double p = 2.0 * s;
    const double q1 = 4.0 * g1 * g2;
    const double q2 = s * s + detuning * detuning;

    LocalSpectrum out;
    out.quartic = {q1 * q2 + 4.0 * w2 * s * s, p * (q1 + q2) + 8.0 * w2 * s, p * p + q1 + q2 + 4.0 * w2, 2.0 * p, 1.0};

    if (detuning == 0.0) {
        // (g₁+g₂+λ)²·[(2g₁+λ)(2g₂+λ) + 4Ω²]
        out.factored = true;
        const double dg = g1 - g2;
        const double disc = (dg - 2.0 * coupling) * (dg + 2.0 * coupling);
        const cplx root = disc >= 0.0 ? cplx(std::sqrt(disc), 0.0) : cplx(0.0, std::sqrt(-disc));
        out.roots = {cplx(-s), cplx(-s), -s - root, -s + root};
    } else {
        Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
        companion(1, 0) = 1.0;
        companion(2, 1) = 1.0;
        companion(3, 2) = 1.0;
        for (int k = 0; k < 4; ++k) companion(k, 3) = -out.quartic[k];
        Eigen::EigenSolver<Eigen::Matrix4d> es(companion, false);
        for (int i = 0; i < 4; ++i) out.roots[i] = polish_root(out.quartic, es.eigenvalues()(i));
    }
    sort_spectrum(out.roots);
    return out;
}

LocalSpectrum local_spectrum_closed(const sys::TlsPair& pair, const bath::ReservoirSpec& bath1,
                                    const bath::ReservoirSpec& bath2) {
    return local_spectrum_closed(bath::relaxation_rate(bath1, pair.omega1), bath::relaxation_rate(bath2, pair.omega2),
                                 pair.detuning(), pair.coupling);
}

double ep_coupling(double g1, double g2) { return 0.5 * std::abs(g1 - g2); }

Spectrum pair_with(const Spectrum& previous, const Spectrum& next) {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (int i = 0; i < 4; ++i) cost += std::abs(next[perm[i]] - previous[i]);
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Spectrum out;
    for (int i = 0; i < 4; ++i) out[i] = next[best[i]];
    return out;
}

bool has_degenerate_pair(const Spectrum& s, double tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(s[i] - s[j]) <= tol) return true;
    return false;
}

SpectrumScan splitting_scan(Approach approach, const sys::TlsPair& pair_template, const bath::ReservoirSpec& bath1,
                            const bath::ReservoirSpec& bath2, const std::vector<double>& grid, int threads) {
    const std::size_t n = grid.size();
    SpectrumScan scan;
    scan.approach = approach;
    scan.coupling = grid;
    scan.eigenvalues.assign(n, Spectrum{});
    scan.splitting.assign(n, std::numeric_limits<double>::quiet_NaN());
    scan.min_separation.assign(n, std::numeric_limits<double>::quiet_NaN());
    std::vector<char> skipped(n, 0);

    parallel_for(n, threads, [&](std::size_t k) {
        sys::TlsPair pair = pair_template;
        pair.coupling = grid[k];
        try {
            const auto system = moments::build_moment_system(approach, pair, bath1, bath2);
            scan.eigenvalues[k] = eigenvalues4(system.generator());
        } catch (const DomainError&) {
            skipped[k] = 1;
        }
    });

    const Spectrum* previous = nullptr;
    for (std::size_t k = 0; k < n; ++k) {
        if (skipped[k]) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            scan.eigenvalues[k].fill(cplx(nan, nan));
            continue;
        }
        if (previous) scan.eigenvalues[k] = pair_with(*previous, scan.eigenvalues[k]);
        previous = &scan.eigenvalues[k];

        const Spectrum& s = scan.eigenvalues[k];
        double lo = s[0].imag(), hi = s[0].imag();
        double sep = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 4; ++i) {
            lo = std::min(lo, s[i].imag());
            hi = std::max(hi, s[i].imag());
            for (int j = i + 1; j < 4; ++j) sep = std::min(sep, std::abs(s[i] - s[j]));
        }
        scan.splitting[k] = hi - lo;
        scan.min_separation[k] = sep;
    }
    scan.skipped.assign(skipped.begin(), skipped.end());
    return scan;
}

std::vector<double> find_inflections(const std::vector<double>& grid, const std::vector<double>& values) {
    std::vector<double> out;
    if (grid.size() < 4 || values.size() != grid.size()) return out;
    std::vector<double> d2(grid.size(), 0.0);
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
        const double h1 = grid[k] - grid[k - 1];
        const double h2 = grid[k + 1] - grid[k];
        d2[k] = 2.0 * (h1 * values[k + 1] - (h1 + h2) * values[k] + h2 * values[k - 1]) / (h1 * h2 * (h1 + h2));
    }
    std::size_t last = 0;  // most recent point with a finite, nonzero second derivative
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
        if (!std::isfinite(d2[k]) || d2[k] == 0.0) continue;
        if (last != 0 && (d2[last] > 0.0) != (d2[k] > 0.0)) out.push_back(0.5 * (grid[last] + grid[k]));
        last = k;
    }
    return out;
}

}  // namespace tlsflow::spectra
