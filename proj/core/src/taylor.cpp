#include "textscale/taylor.hpp"

#include <cmath>
#include <utility>

#include "textscale/errors.hpp"

namespace textscale {

DispersionPoints dispersion(const TokenView& view, std::size_t segment_size) {
    if (segment_size < 1) throw Error("segment_size must be >= 1");
    const std::size_t n_segments = view.size() / segment_size;
    if (n_segments < 2) throw TooFewSegments(view.size(), segment_size);

    const std::uint32_t vocab_size = view.vocab->size();
    std::vector<std::uint64_t> sum(vocab_size, 0);
    std::vector<unsigned __int128> sum_sq(vocab_size, 0);

    std::vector<std::uint32_t> counts(vocab_size, 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(segment_size);

    for (std::size_t s = 0; s < n_segments; ++s) {
        const std::size_t begin = s * segment_size;
        for (std::size_t i = 0; i < segment_size; ++i) {
            const std::uint32_t id = view.ids[begin + i];
            if (counts[id]++ == 0) touched.push_back(id);
        }
        for (const std::uint32_t id : touched) {
            const std::uint64_t c = counts[id];
            sum[id] += c;
            sum_sq[id] += static_cast<unsigned __int128>(c) * c;
            counts[id] = 0;
        }
        touched.clear();
    }

    DispersionPoints result;
    result.segment_size = segment_size;
    result.n_segments = n_segments;

    const auto s_count = static_cast<double>(n_segments);
    for (std::uint32_t id = 0; id < vocab_size; ++id) {
        if (sum[id] == 0) continue; // word absent from every retained segment
        // Population variance numerator S*sum(c^2) - sum(c)^2, exact in
        // integer arithmetic so the zero-variance exclusion is exact too.
        const unsigned __int128 var_num =
            static_cast<unsigned __int128>(n_segments) * sum_sq[id] -
            static_cast<unsigned __int128>(sum[id]) * sum[id];
        DispersionEntry entry;
        entry.word_id = id;
        entry.mu = static_cast<double>(sum[id]) / s_count;
        if (var_num == 0) {
            entry.sigma = 0.0;
            result.excluded.push_back(entry);
        } else {
            entry.sigma = std::sqrt(static_cast<double>(var_num)) / s_count;
            result.retained.push_back(entry);
        }
    }
    return result;
}

PowerLawFit taylor_alpha(const DispersionPoints& points) {
    if (points.retained.size() < 2) throw FewerThanTwoPoints(points.retained.size());
    std::vector<std::pair<double, double>> xy;
    xy.reserve(points.retained.size());
    for (const auto& e : points.retained) xy.emplace_back(e.mu, e.sigma);
    return fit_loglog(xy);
}

} // namespace textscale
