#include "textscale/power_law.hpp"

#include <cmath>
#include <vector>

#include "textscale/errors.hpp"

namespace textscale {

PowerLawFit fit_loglog(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw FewerThanTwoPoints(points.size());

    std::vector<double> lx(points.size());
    std::vector<double> ly(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [x, y] = points[i];
        if (!(x > 0.0) || !(y > 0.0)) throw NonPositiveCoordinate(x, y);
        lx[i] = std::log(x);
        ly[i] = std::log(y);
    }

    const auto n = static_cast<double>(points.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        mean_x += lx[i];
        mean_y += ly[i];
    }
    mean_x /= n;
    mean_y /= n;

    // Centered sums keep the fit well-conditioned for narrow x ranges.
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dx = lx[i] - mean_x;
        const double dy = ly[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    if (sxx == 0.0) throw Error("log-log fit undefined: all abscissae identical");

    PowerLawFit fit;
    fit.n_points = points.size();

    if (syy == 0.0) {
        // Constant y: exact zero-exponent power law.
        fit.exponent = 0.0;
        fit.log_intercept = mean_y;
        fit.r_squared = 1.0;
        fit.stderr_exponent = 0.0;
        return fit;
    }

    fit.exponent = sxy / sxx;
    fit.log_intercept = mean_y - fit.exponent * mean_x;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double resid = ly[i] - (fit.log_intercept + fit.exponent * lx[i]);
        ss_res += resid * resid;
    }
    fit.r_squared = 1.0 - ss_res / syy;
    if (fit.r_squared < 0.0) fit.r_squared = 0.0;
    if (fit.r_squared > 1.0) fit.r_squared = 1.0;

    if (points.size() > 2) {
        fit.stderr_exponent = std::sqrt(ss_res / (n - 2.0) / sxx);
    }
    return fit;
}

} // namespace textscale
