#pragma once

#include <cstdint>
#include <vector>

#include "textscale/power_law.hpp"
#include "textscale/token_sequence.hpp"

namespace textscale {

struct DispersionEntry {
    std::uint32_t word_id = 0;
    double mu = 0.0;    // mean count per segment
    double sigma = 0.0; // population standard deviation of counts
};

// Per-word dispersion of counts across fixed-size segments. Words whose
// counts never vary (sigma exactly zero) sit in `excluded`; only `retained`
// entries feed the fluctuation-scaling fit.
struct DispersionPoints {
    std::vector<DispersionEntry> retained;
    std::vector<DispersionEntry> excluded;
    std::size_t segment_size = 0;
    std::size_t n_segments = 0;
};

// Cuts the view into floor(N / segment_size) consecutive non-overlapping
// segments (tail dropped) and measures each word's mean and population
// standard deviation of per-segment counts. The zero-variance test runs on
// exact integer sums, so exclusion never depends on rounding.
DispersionPoints dispersion(const TokenView& view, std::size_t segment_size = 1000);

// Fluctuation-scaling exponent: OLS slope of log sigma against log mu over
// retained entries.
PowerLawFit taylor_alpha(const DispersionPoints& points);

} // namespace textscale
