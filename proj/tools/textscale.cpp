// textscale: scale-free complexity signatures for text corpora.
//
//   textscale run     manifest-driven pipeline, CSV reports
//   textscale file    analyze one document
//   textscale synth   emit a synthetic rank-distribution corpus
//   textscale shuffle rewrite a document with its tokens permuted

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "textscale/errors.hpp"
#include "textscale/pipeline.hpp"
#include "textscale/redundancy.hpp"
#include "textscale/synthetic.hpp"
#include "textscale/tokenizer.hpp"

namespace fs = std::filesystem;
using namespace textscale;

namespace {

void add_tokenize_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_flag_callback(
        "--keep-punctuation",
        [&config] { config.tokenize.strip_punctuation = false; },
        "Retain punctuation characters inside tokens");
    cmd->add_flag_callback(
        "--no-case-fold", [&config] { config.tokenize.case_fold = false; },
        "Keep the original letter case");
}

int cmd_file(const fs::path& path, const RunConfig& config, bool raw_compression,
             const std::string& dump_curve, const std::string& dump_dispersion,
             const std::string& dump_zipf) {
    const FileAnalysis analysis = analyze_file(path, config, raw_compression);
    print_file_analysis(std::cout, path, analysis, config);

    if (!dump_curve.empty()) {
        std::ofstream out(dump_curve, std::ios::binary);
        if (!out) throw Error("cannot write " + dump_curve);
        out << config_header(config) << "n,v\n";
        for (const auto& s : analysis.curve.samples) {
            out << s.n_tokens << "," << s.n_types << "\n";
        }
    }
    if (!dump_dispersion.empty()) {
        std::ofstream out(dump_dispersion, std::ios::binary);
        if (!out) throw Error("cannot write " + dump_dispersion);
        out << config_header(config) << "word,mu,sigma,excluded\n";
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        const TokenSequence seq = normalize_and_tokenize(buf.str(), config.tokenize,
                                                         path.string());
        for (const auto& e : analysis.dispersion.retained) {
            out << seq.vocab().token(e.word_id) << "," << format_metric(e.mu) << ","
                << format_metric(e.sigma) << ",0\n";
        }
        for (const auto& e : analysis.dispersion.excluded) {
            out << seq.vocab().token(e.word_id) << "," << format_metric(e.mu) << ","
                << format_metric(e.sigma) << ",1\n";
        }
    }
    if (!dump_zipf.empty()) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        const TokenSequence seq = normalize_and_tokenize(buf.str(), config.tokenize,
                                                         path.string());
        std::ofstream out(dump_zipf, std::ios::binary);
        if (!out) throw Error("cannot write " + dump_zipf);
        out << config_header(config) << "# diagnostic: rank-frequency table\n"
            << "rank,frequency,word\n";
        for (const auto& e : zipf_rank_frequency(seq.view())) {
            out << e.rank << "," << e.frequency << "," << e.word << "\n";
        }
    }
    return 0;
}

int cmd_synth(const SyntheticSpec& spec, const fs::path& out_path) {
    const TokenSequence seq = generate(spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path.string());
    // 20 tokens per line keeps the file friendly to line-based tools
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << seq.token(i);
        out << ((i + 1) % 20 == 0 ? '\n' : ' ');
    }
    out << '\n';
    std::cout << "wrote " << seq.size() << " tokens, " << seq.vocab().size()
              << " distinct, to " << out_path.string() << "\n";
    return 0;
}

int cmd_shuffle(const fs::path& in_path, const fs::path& out_path, std::uint64_t seed,
                const RunConfig& config) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw PathNotFound(in_path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const TokenSequence seq = normalize_and_tokenize(buf.str(), config.tokenize,
                                                     in_path.string());
    const TokenSequence mixed = shuffle(seq, seed);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path.string());
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        out << mixed.token(i);
        out << ((i + 1) % 20 == 0 ? '\n' : ' ');
    }
    out << '\n';
    std::cout << "shuffled " << mixed.size() << " tokens (seed " << seed << ") to "
              << out_path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scale-free complexity signatures for text corpora"};
    app.require_subcommand(1);

    RunConfig config;

    // --- run ---
    auto* run = app.add_subcommand("run", "Analyze a manifest of category corpora");
    std::string manifest;
    std::string out_dir;
    run->add_option("--manifest", manifest, "JSON corpus manifest")->required();
    run->add_option("--out", out_dir, "Output directory for CSV reports")
        ->envname("TEXTSCALE_OUT")
        ->required();
    run->add_option("--chunk-size", config.chunk_size, "Tokens per analysis chunk")
        ->default_val(300000);
    run->add_option("--segment-size", config.segment_size,
                    "Tokens per dispersion segment")
        ->default_val(1000);
    run->add_option("--samples-per-decade", config.samples_per_decade,
                    "Growth-curve sampling density")
        ->default_val(20);
    run->add_option("--min-fit-n", config.min_fit_n,
                    "Smallest N used in the vocabulary-growth fit")
        ->default_val(100);
    run->add_option("--seed", config.seed, "Seed stamped into output metadata")
        ->default_val(0);
    run->add_flag("--dump-curves", config.dump_curves,
                  "Also write per-chunk growth curves under <out>/curves/");
    run->add_flag("--dump-dispersion", config.dump_dispersion,
                  "Also write per-chunk dispersion tables under <out>/dispersion/");
    add_tokenize_flags(run, config);

    // --- file ---
    auto* file = app.add_subcommand("file", "Analyze a single plain-text document");
    std::string file_path;
    bool raw_compression = false;
    std::string dump_curve;
    std::string dump_dispersion;
    std::string dump_zipf;
    file->add_option("path", file_path, "Plain-text file")->required();
    file->add_option("--chunk-size", config.chunk_size,
                     "Unused in single-file mode; kept for config stamps")
        ->default_val(300000);
    file->add_option("--segment-size", config.segment_size,
                     "Tokens per dispersion segment")
        ->default_val(1000);
    file->add_option("--samples-per-decade", config.samples_per_decade,
                     "Growth-curve sampling density")
        ->default_val(20);
    file->add_option("--min-fit-n", config.min_fit_n,
                     "Smallest N used in the vocabulary-growth fit")
        ->default_val(100);
    file->add_flag("--raw-compression", raw_compression,
                   "Also report r over the raw file bytes (pre-normalization)");
    file->add_option("--dump-curves", dump_curve, "Write the growth curve CSV here");
    file->add_option("--dump-dispersion", dump_dispersion,
                     "Write the per-word dispersion CSV here");
    file->add_option("--dump-zipf", dump_zipf,
                     "Write the diagnostic rank-frequency CSV here");
    add_tokenize_flags(file, config);

    // --- synth ---
    auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus file");
    SyntheticSpec spec;
    std::string synth_out;
    synth->add_option("--vocab", spec.vocab_size, "Rank-distribution support size")
        ->required();
    synth->add_option("--exponent", spec.zipf_exponent,
                      "Rank-distribution exponent (0 = uniform)")
        ->default_val(1.0);
    synth->add_option("--length", spec.length, "Number of tokens")->required();
    synth->add_option("--seed", spec.seed, "Generator seed")->default_val(0);
    synth->add_option("--out", synth_out, "Output text file")->required();

    // --- shuffle ---
    auto* shuf = app.add_subcommand("shuffle", "Permute a document's tokens uniformly");
    std::string shuffle_in;
    std::string shuffle_out;
    std::uint64_t shuffle_seed = 0;
    shuf->add_option("input", shuffle_in, "Plain-text file")->required();
    shuf->add_option("output", shuffle_out, "Destination for the shuffled text")
        ->required();
    shuf->add_option("--seed", shuffle_seed, "Permutation seed")->default_val(0);
    add_tokenize_flags(shuf, config);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            config.manifest_path = fs::absolute(manifest);
            config.output_dir = out_dir;
            return run_pipeline(config, std::cerr);
        }
        if (file->parsed()) {
            return cmd_file(file_path, config, raw_compression, dump_curve,
                            dump_dispersion, dump_zipf);
        }
        if (synth->parsed()) return cmd_synth(spec, synth_out);
        if (shuf->parsed()) return cmd_shuffle(shuffle_in, shuffle_out, shuffle_seed, config);
    } catch (const TooFewSegments& e) {
        std::cerr << "textscale: " << e.what()
                  << "\n  hint: pass a smaller --segment-size (the text needs at least two "
                     "full segments)\n";
        return 1;
    } catch (const FewerThanTwoPoints& e) {
        std::cerr << "textscale: " << e.what()
                  << "\n  hint: the text is too short for a stable fit; for tiny inputs try "
                     "a smaller --min-fit-n\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "textscale: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
