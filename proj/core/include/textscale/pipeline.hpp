#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "textscale/aggregate.hpp"
#include "textscale/heaps.hpp"
#include "textscale/manifest.hpp"
#include "textscale/redundancy.hpp"
#include "textscale/taylor.hpp"
#include "textscale/tokenizer.hpp"

namespace textscale {

// Everything that influences a run's outputs. The whole struct is stamped
// into every output file header, so results carry their own provenance and
// a rerun from that header reproduces them byte for byte.
struct RunConfig {
    std::filesystem::path manifest_path;
    std::filesystem::path output_dir;
    std::size_t chunk_size = 300000;
    std::size_t segment_size = 1000;
    TokenizeOptions tokenize;
    int samples_per_decade = 20;
    std::uint64_t min_fit_n = 100;
    int compression_level = kCompressionLevel;
    std::uint64_t seed = 0;
    bool dump_curves = false;
    bool dump_dispersion = false;
};

// Header comment block shared by all emitted files.
std::string config_header(const RunConfig& config);

// One category's concatenated, normalized token stream plus ingest
// accounting.
struct CategoryIngest {
    TokenSequence sequence;
    std::size_t files_count = 0;
    std::uint64_t total_words = 0;
    std::uint64_t vocabulary = 0;
    std::uint64_t utf8_replacements = 0;
};

CategoryIngest ingest_category(const Category& category, const TokenizeOptions& options);

struct CategoryResult {
    std::string name;
    LabelClass label = LabelClass::other;
    CategorySummary summary;
    std::size_t dropped_tail_tokens = 0;
    std::uint64_t utf8_replacements = 0;
};

struct PipelineResult {
    std::vector<ComplexitySignature> signatures; // manifest order, chunk index ascending
    std::vector<CategoryResult> categories;
};

// Computes every per-chunk signature and per-category summary. Chunks fan
// out over a small worker pool; results land in index order so downstream
// output is deterministic.
PipelineResult analyze_corpus(const RunConfig& config);

// Writes signatures.csv, summary.csv, scatter_alpha_beta.csv, box_r.csv and
// plane_hnorm_r.csv under config.output_dir. On failure every partial
// output is removed before the error propagates.
void write_outputs(const PipelineResult& result, const RunConfig& config);

// analyze + write with CLI-style error reporting: returns 0 on success,
// nonzero after printing a diagnostic to `err`.
int run_pipeline(const RunConfig& config, std::ostream& err);

// Single-document mode: the whole file is one analysis unit.
struct FileAnalysis {
    ComplexitySignature signature;
    GrowthCurve curve;
    DispersionPoints dispersion;
    std::uint64_t utf8_replacements = 0;
    std::optional<CompressionResult> raw_compression; // pre-normalization bytes
};

FileAnalysis analyze_file(const std::filesystem::path& path, const RunConfig& config,
                          bool raw_compression = false);

void print_file_analysis(std::ostream& out, const std::filesystem::path& path,
                         const FileAnalysis& analysis, const RunConfig& config);

// Fixed numeric formatting used by every emitter: 6 significant digits,
// '.' decimal separator.
std::string format_metric(double value);

} // namespace textscale
