#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "textscale/manifest.hpp"
#include "textscale/power_law.hpp"
#include "textscale/redundancy.hpp"
#include "textscale/tokenizer.hpp"

namespace textscale {

// Per-chunk metric tuple. Every component is computed from the same chunk
// under the same run options.
struct ComplexitySignature {
    std::string category;
    std::size_t chunk_index = 0;
    PowerLawFit beta;
    PowerLawFit alpha;
    RedundancyMetrics redundancy;
    std::uint64_t n_tokens = 0;
    std::uint64_t n_types = 0;
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0; // population standard deviation (divide by n)
    std::size_t n = 0;
};

MetricSummary summarize_values(std::span<const double> values);

// Mean and population std of each metric over a category's chunks.
struct CategorySummary {
    std::string category;
    std::size_t files_count = 0;
    std::uint64_t total_words = 0;
    std::uint64_t vocabulary = 0;
    double avg_words_per_file = 0.0;
    std::size_t n_chunks = 0;
    MetricSummary beta;
    MetricSummary alpha;
    MetricSummary r;
    MetricSummary h_norm; // over chunks where defined (V >= 2)
};

struct CategoryCorpusInfo {
    std::size_t files_count = 0;
    std::uint64_t total_words = 0;
    std::uint64_t vocabulary = 0;
};

CategorySummary summarize(std::span<const ComplexitySignature> signatures,
                          const std::string& category, const CategoryCorpusInfo& info);

// Table of per-category corpus statistics, computed after normalization and
// before any chunk tail is dropped.
struct BasicStats {
    std::string category;
    std::size_t files_count = 0;
    std::uint64_t total_words = 0;
    std::uint64_t vocabulary = 0;
    double avg_words_per_file = 0.0;
};

std::vector<BasicStats> basic_stats(const CorpusManifest& manifest,
                                    const TokenizeOptions& options);

} // namespace textscale
