// optimize.cpp: Golden-section search and coarse-to-fine log-axis maximization

#include "tlsflow/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tlsflow::opt {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

double finite_or_floor(double v) { return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity(); }

}  // namespace

Bracket golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("golden_section_maximize: empty interval");
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = finite_or_floor(f(x1));
    double f2 = finite_or_floor(f(x2));
    while (b - a > tol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = finite_or_floor(f(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = finite_or_floor(f(x2));
        }
    }
    Bracket out{a, b, 0.0, 0.0};
    if (f1 >= f2) {
        out.argmax = x1;
        out.value = f1;
    } else {
        out.argmax = x2;
        out.value = f2;
    }
    return out;
}

LogMaximum maximize_log(const std::function<double(double)>& f, double lo, double hi, int coarse_points,
                        double tol_log) {
    if (!(lo > 0.0) || !(lo < hi)) throw std::invalid_argument("maximize_log: need 0 < lo < hi");
    if (coarse_points < 3) throw std::invalid_argument("maximize_log: need at least 3 coarse points");

    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    const int n = coarse_points;
    std::vector<double> lx(n), fx(n);
    for (int k = 0; k < n; ++k) {
        lx[k] = llo + (lhi - llo) * k / (n - 1);
        fx[k] = finite_or_floor(f(std::exp(lx[k])));
    }

    auto g = [&](double u) { return f(std::exp(u)); };

    LogMaximum out;
    int best = 0;
    for (int k = 1; k < n; ++k)
        if (fx[k] > fx[best]) best = k;
    out.argmax = std::exp(lx[best]);
    out.value = fx[best];

    for (int k = 1; k + 1 < n; ++k) {
        if (!(fx[k] >= fx[k - 1] && fx[k] > fx[k + 1])) continue;
        Bracket b = golden_section_maximize(g, lx[k - 1], lx[k + 1], tol_log);
        b.lo = std::exp(b.lo);
        b.hi = std::exp(b.hi);
        b.argmax = std::exp(b.argmax);
        out.brackets.push_back(b);
        if (b.value >= out.value) {
            out.value = b.value;
            out.argmax = b.argmax;
        }
    }
    out.interior = !out.brackets.empty() && out.value >= fx[0] && out.value >= fx[n - 1];
    return out;
}

}  // namespace tlsflow::opt
