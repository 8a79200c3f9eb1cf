// optimize.hpp: One-dimensional maximization on a logarithmic axis

#pragma once

#include <functional>
#include <vector>

namespace tlsflow::opt {

struct Bracket {
    double lo{0.0};
    double hi{0.0};
    double argmax{0.0};
    double value{0.0};
};

// Golden-section search for a maximum of f on [lo, hi], stopping when hi − lo ≤ tol.
Bracket golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double tol);

struct LogMaximum {
    double argmax{0.0};
    double value{0.0};
    bool interior{false};          // false when the best coarse point sits on a bound
    std::vector<Bracket> brackets;  // one refined bracket per interior local maximum on the coarse grid
};

// Coarse log-spaced scan of f over [lo, hi] followed by golden-section refinement of every
// interior coarse peak, carried out in log x down to a bracket of width tol_log.
// Non-finite samples are treated as −∞.
LogMaximum maximize_log(const std::function<double(double)>& f, double lo, double hi, int coarse_points = 64,
                        double tol_log = 1e-10);

}  // namespace tlsflow::opt
