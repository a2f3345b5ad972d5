#pragma once

#include <cstdint>
#include <vector>

#include "textscale/power_law.hpp"
#include "textscale/token_sequence.hpp"

namespace textscale {

struct GrowthSample {
    std::uint64_t n_tokens = 0; // running token count N
    std::uint64_t n_types = 0;  // distinct tokens seen so far V
};

// Sampled type-token curve: N strictly increasing, V non-decreasing,
// V <= N everywhere.
struct GrowthCurve {
    std::vector<GrowthSample> samples;

    std::uint64_t final_tokens() const { return samples.empty() ? 0 : samples.back().n_tokens; }
    std::uint64_t final_types() const { return samples.empty() ? 0 : samples.back().n_types; }
};

// Single pass over the stream recording V at logarithmically spaced N
// (samples_per_decade points per factor of ten) plus the final N. The log
// grid keeps the later fit from being dominated by large-N samples.
GrowthCurve growth_curve(const TokenView& view, int samples_per_decade = 20);

// Vocabulary-growth exponent: OLS slope of log V against log N over samples
// with N >= min_n. The head cutoff skips the trivially linear region where
// V tracks N for any text.
PowerLawFit heaps_beta(const GrowthCurve& curve, std::uint64_t min_n = 100);

} // namespace textscale
