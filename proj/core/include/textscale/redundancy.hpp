#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "textscale/token_sequence.hpp"

namespace textscale {

// Compressor parameters are pinned (gzip container, DEFLATE level 9, 32 KiB
// window, zeroed gzip header fields) so byte counts are reproducible.
inline constexpr int kCompressionLevel = 9;
inline constexpr const char* kCompressorId = "gzip/deflate";

struct CompressionResult {
    double r = 0.0; // raw_bytes / compressed_bytes
    std::uint64_t raw_bytes = 0;
    std::uint64_t compressed_bytes = 0;
};

struct RedundancyMetrics {
    double r = 0.0;
    double h_bits = 0.0;                // word-unigram Shannon entropy, bits/word
    std::optional<double> h_norm;       // undefined when the vocabulary is a singleton
    std::uint64_t raw_bytes = 0;
    std::uint64_t compressed_bytes = 0;
};

// Size of the input after DEFLATE at maximum compression inside a gzip
// container. Output bytes are counted, never persisted.
std::uint64_t gzip_compressed_size(std::string_view bytes, int level = kCompressionLevel);

// Compression rate of the normalized token stream (tokens joined by single
// spaces, UTF-8).
CompressionResult compression_rate(const TokenView& view, int level = kCompressionLevel);

// Compression rate of arbitrary raw bytes, for comparing against the
// pre-normalization text.
CompressionResult compression_rate_raw(std::string_view bytes, int level = kCompressionLevel);

// H = -sum P(w) log2 P(w) with P(w) = count(w) / N.
double shannon_entropy(const TokenView& view);

// H / log2(V). Throws UndefinedForSingletonVocabulary when V = 1.
double normalized_entropy(const TokenView& view);

// Convenience bundle of r, H and H_norm for one chunk.
RedundancyMetrics redundancy_metrics(const TokenView& view, int level = kCompressionLevel);

struct RankFrequency {
    std::size_t rank = 0;
    std::uint64_t frequency = 0;
    std::string_view word;
};

// Diagnostic rank-frequency table: frequencies descending, rank from 1,
// ties broken by lexicographic token order.
std::vector<RankFrequency> zipf_rank_frequency(const TokenView& view);

} // namespace textscale
