#include "textscale/heaps.hpp"

#include <cmath>
#include <utility>

#include "textscale/errors.hpp"

namespace textscale {

GrowthCurve growth_curve(const TokenView& view, int samples_per_decade) {
    if (view.empty()) throw EmptyDocument("growth_curve");
    if (samples_per_decade < 1) throw Error("samples_per_decade must be >= 1");

    const std::uint64_t total = view.size();

    // Logarithmically spaced sample positions, deduplicated, ending at N.
    std::vector<std::uint64_t> grid;
    std::uint64_t prev = 0;
    for (int k = 0;; ++k) {
        const auto n = static_cast<std::uint64_t>(
            std::llround(std::pow(10.0, static_cast<double>(k) / samples_per_decade)));
        if (n >= total) break;
        if (n > prev) {
            grid.push_back(n);
            prev = n;
        }
    }
    grid.push_back(total);

    GrowthCurve curve;
    curve.samples.reserve(grid.size());

    std::vector<bool> seen(view.vocab->size(), false);
    std::uint64_t types = 0;
    std::size_t next_sample = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        const std::uint32_t id = view.ids[i];
        if (!seen[id]) {
            seen[id] = true;
            ++types;
        }
        if (i + 1 == grid[next_sample]) {
            curve.samples.push_back({i + 1, types});
            ++next_sample;
        }
    }
    return curve;
}

PowerLawFit heaps_beta(const GrowthCurve& curve, std::uint64_t min_n) {
    std::vector<std::pair<double, double>> points;
    points.reserve(curve.samples.size());
    for (const auto& s : curve.samples) {
        if (s.n_tokens >= min_n) {
            points.emplace_back(static_cast<double>(s.n_tokens),
                                static_cast<double>(s.n_types));
        }
    }
    if (points.size() < 2) throw FewerThanTwoPoints(points.size());
    return fit_loglog(points);
}

} // namespace textscale
