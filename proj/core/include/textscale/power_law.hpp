#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace textscale {

// Result of an ordinary least-squares fit of log y against log x.
struct PowerLawFit {
    double exponent = 0.0;        // slope in log-log space
    double log_intercept = 0.0;   // natural-log intercept
    double r_squared = 0.0;       // coefficient of determination in [0, 1]
    std::size_t n_points = 0;
    double stderr_exponent = 0.0; // standard error of the slope
};

// Unweighted OLS on (ln x, ln y). Requires >= 2 points with strictly
// positive coordinates; callers filter zeros beforehand. Constant y is a
// perfect zero-exponent power law: exponent 0, r_squared 1.
PowerLawFit fit_loglog(std::span<const std::pair<double, double>> points);

} // namespace textscale
