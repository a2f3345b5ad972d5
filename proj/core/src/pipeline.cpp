#include "textscale/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "textscale/chunker.hpp"
#include "textscale/errors.hpp"

namespace textscale {

namespace fs = std::filesystem;

std::string format_metric(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string config_header(const RunConfig& config) {
    std::ostringstream out;
    out << "# textscale v0.1\n";
    out << "# config: manifest=" << config.manifest_path.string()
        << " chunk_size=" << config.chunk_size << " segment_size=" << config.segment_size
        << " case_fold=" << (config.tokenize.case_fold ? 1 : 0)
        << " strip_punctuation=" << (config.tokenize.strip_punctuation ? 1 : 0)
        << " samples_per_decade=" << config.samples_per_decade
        << " min_fit_n=" << config.min_fit_n << " compressor=" << kCompressorId
        << " level=" << config.compression_level << " seed=" << config.seed
        << " std=population\n";
    return out.str();
}

CategoryIngest ingest_category(const Category& category, const TokenizeOptions& options) {
    const auto files = category_files(category);
    if (files.empty()) throw EmptyCategory(category.name);

    auto vocab = std::make_shared<Vocabulary>();
    std::vector<std::uint32_t> ids;
    std::uint64_t byte_length = 0;
    std::uint64_t replacements = 0;

    CategoryIngest ingest;
    ingest.files_count = files.size();
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw PathNotFound(file.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        const TokenSequence seq = normalize_and_tokenize(buf.str(), options, file.string(), vocab);
        if (byte_length > 0) byte_length += 1; // joining space between files
        byte_length += seq.byte_length();
        replacements += seq.utf8_replacements();
        ids.insert(ids.end(), seq.view().ids.begin(), seq.view().ids.end());
    }

    ingest.total_words = ids.size();
    ingest.vocabulary = vocab->size();
    ingest.utf8_replacements = replacements;
    ingest.sequence = TokenSequence(std::move(vocab), std::move(ids), category.name,
                                    byte_length, replacements);
    return ingest;
}

namespace {

ComplexitySignature compute_signature(const TokenView& view, const std::string& category,
                                      std::size_t chunk_index, const RunConfig& config,
                                      GrowthCurve* curve_out, DispersionPoints* disp_out) {
    ComplexitySignature sig;
    sig.category = category;
    sig.chunk_index = chunk_index;

    GrowthCurve curve = growth_curve(view, config.samples_per_decade);
    sig.beta = heaps_beta(curve, config.min_fit_n);
    sig.n_tokens = curve.final_tokens();
    sig.n_types = curve.final_types();

    DispersionPoints disp = dispersion(view, config.segment_size);
    sig.alpha = taylor_alpha(disp);

    sig.redundancy = redundancy_metrics(view, config.compression_level);

    if (curve_out) *curve_out = std::move(curve);
    if (disp_out) *disp_out = std::move(disp);
    return sig;
}

std::string sanitize_name(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                          (c >= '0' && c <= '9') || c == '-' || c == '_';
        if (!keep) c = '_';
    }
    return out;
}

void write_curve_csv(const fs::path& path, const GrowthCurve& curve, const RunConfig& config) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << config_header(config) << "n,v\n";
    for (const auto& s : curve.samples) out << s.n_tokens << "," << s.n_types << "\n";
}

void write_dispersion_csv(const fs::path& path, const DispersionPoints& disp,
                          const Vocabulary& vocab, const RunConfig& config) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << config_header(config) << "word,mu,sigma,excluded\n";
    for (const auto& e : disp.retained) {
        out << vocab.token(e.word_id) << "," << format_metric(e.mu) << ","
            << format_metric(e.sigma) << ",0\n";
    }
    for (const auto& e : disp.excluded) {
        out << vocab.token(e.word_id) << "," << format_metric(e.mu) << ","
            << format_metric(e.sigma) << ",1\n";
    }
}

} // namespace

PipelineResult analyze_corpus(const RunConfig& config) {
    const CorpusManifest manifest = load_manifest(config.manifest_path);

    PipelineResult result;
    const fs::path curves_dir = config.output_dir / "curves";
    const fs::path dispersion_dir = config.output_dir / "dispersion";
    if (config.dump_curves) fs::create_directories(curves_dir);
    if (config.dump_dispersion) fs::create_directories(dispersion_dir);

    for (const auto& category : manifest.categories) {
        const CategoryIngest ingest = ingest_category(category, config.tokenize);
        const ChunkingResult chunking = chunk(ingest.sequence, config.chunk_size);
        if (chunking.chunks.empty()) {
            throw Error("category \"" + category.name + "\" has " +
                        std::to_string(ingest.sequence.size()) +
                        " tokens, fewer than half a chunk of " +
                        std::to_string(config.chunk_size));
        }

        std::vector<ComplexitySignature> signatures(chunking.chunks.size());
        std::vector<GrowthCurve> curves(config.dump_curves ? chunking.chunks.size() : 0);
        std::vector<DispersionPoints> disps(config.dump_dispersion ? chunking.chunks.size()
                                                                   : 0);

        // Chunk fan-out: a small pool pulls indices off a shared counter;
        // results land in index order so output never depends on timing.
        const unsigned n_workers = std::max(
            1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                   static_cast<unsigned>(chunking.chunks.size())));
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;

        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= chunking.chunks.size()) return;
                try {
                    const Chunk& c = chunking.chunks[i];
                    signatures[i] = compute_signature(
                        ingest.sequence.view(c.offset, c.size), category.name, c.index, config,
                        config.dump_curves ? &curves[i] : nullptr,
                        config.dump_dispersion ? &disps[i] : nullptr);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w + 1 < n_workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);

        for (std::size_t i = 0; i < signatures.size(); ++i) {
            const std::string base =
                sanitize_name(category.name) + "_chunk" + std::to_string(i) + ".csv";
            if (config.dump_curves) write_curve_csv(curves_dir / base, curves[i], config);
            if (config.dump_dispersion) {
                write_dispersion_csv(dispersion_dir / base, disps[i],
                                     ingest.sequence.vocab(), config);
            }
        }

        CategoryResult cat;
        cat.name = category.name;
        cat.label = category.label;
        cat.dropped_tail_tokens = chunking.dropped_tail_tokens;
        cat.utf8_replacements = ingest.utf8_replacements;
        cat.summary = summarize(signatures, category.name,
                                {ingest.files_count, ingest.total_words, ingest.vocabulary});
        result.categories.push_back(std::move(cat));
        for (auto& sig : signatures) result.signatures.push_back(std::move(sig));
    }
    return result;
}

void write_outputs(const PipelineResult& result, const RunConfig& config) {
    fs::create_directories(config.output_dir);
    const fs::path signatures_path = config.output_dir / "signatures.csv";
    const fs::path summary_path = config.output_dir / "summary.csv";
    const fs::path scatter_path = config.output_dir / "scatter_alpha_beta.csv";
    const fs::path box_path = config.output_dir / "box_r.csv";
    const fs::path plane_path = config.output_dir / "plane_hnorm_r.csv";
    const std::vector<fs::path> all_paths{signatures_path, summary_path, scatter_path,
                                          box_path, plane_path};

    auto label_of = [&](const std::string& category) {
        for (const auto& c : result.categories) {
            if (c.name == category) return to_string(c.label);
        }
        return std::string("other");
    };

    try {
        {
            std::ofstream out(signatures_path, std::ios::binary);
            if (!out) throw Error("cannot write " + signatures_path.string());
            out << config_header(config)
                << "category,chunk_id,beta,beta_stderr,alpha,alpha_stderr,r,h_bits,h_norm,"
                   "n_tokens,n_types\n";
            for (const auto& sig : result.signatures) {
                out << sig.category << "," << sig.chunk_index << ","
                    << format_metric(sig.beta.exponent) << ","
                    << format_metric(sig.beta.stderr_exponent) << ","
                    << format_metric(sig.alpha.exponent) << ","
                    << format_metric(sig.alpha.stderr_exponent) << ","
                    << format_metric(sig.redundancy.r) << ","
                    << format_metric(sig.redundancy.h_bits) << ","
                    << (sig.redundancy.h_norm ? format_metric(*sig.redundancy.h_norm) : "nan")
                    << "," << sig.n_tokens << "," << sig.n_types << "\n";
            }
        }
        {
            std::ofstream out(summary_path, std::ios::binary);
            if (!out) throw Error("cannot write " + summary_path.string());
            out << config_header(config)
                << "category,label_class,files_count,total_words,vocabulary,"
                   "avg_words_per_file,n_chunks,dropped_tail_tokens,utf8_replacements,"
                   "beta_mean,beta_std,alpha_mean,alpha_std,r_mean,r_std,hnorm_mean,"
                   "hnorm_std\n";
            for (const auto& cat : result.categories) {
                const auto& s = cat.summary;
                out << s.category << "," << to_string(cat.label) << "," << s.files_count << ","
                    << s.total_words << "," << s.vocabulary << ","
                    << format_metric(s.avg_words_per_file) << "," << s.n_chunks << ","
                    << cat.dropped_tail_tokens << "," << cat.utf8_replacements << ","
                    << format_metric(s.beta.mean) << "," << format_metric(s.beta.stddev) << ","
                    << format_metric(s.alpha.mean) << "," << format_metric(s.alpha.stddev)
                    << "," << format_metric(s.r.mean) << "," << format_metric(s.r.stddev)
                    << "," << format_metric(s.h_norm.mean) << ","
                    << format_metric(s.h_norm.stddev) << "\n";
            }
        }
        {
            std::ofstream out(scatter_path, std::ios::binary);
            if (!out) throw Error("cannot write " + scatter_path.string());
            out << config_header(config) << "category,label_class,chunk_id,beta,alpha\n";
            for (const auto& sig : result.signatures) {
                out << sig.category << "," << label_of(sig.category) << "," << sig.chunk_index
                    << "," << format_metric(sig.beta.exponent) << ","
                    << format_metric(sig.alpha.exponent) << "\n";
            }
        }
        {
            std::ofstream out(box_path, std::ios::binary);
            if (!out) throw Error("cannot write " + box_path.string());
            out << config_header(config) << "category,label_class,chunk_id,r\n";
            for (const auto& sig : result.signatures) {
                out << sig.category << "," << label_of(sig.category) << "," << sig.chunk_index
                    << "," << format_metric(sig.redundancy.r) << "\n";
            }
        }
        {
            std::ofstream out(plane_path, std::ios::binary);
            if (!out) throw Error("cannot write " + plane_path.string());
            out << config_header(config) << "category,label_class,hnorm_mean,r_mean\n";
            for (const auto& cat : result.categories) {
                out << cat.name << "," << to_string(cat.label) << ","
                    << format_metric(cat.summary.h_norm.mean) << ","
                    << format_metric(cat.summary.r.mean) << "\n";
            }
        }
    } catch (...) {
        for (const auto& p : all_paths) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        throw;
    }
}

int run_pipeline(const RunConfig& config, std::ostream& err) {
    try {
        const PipelineResult result = analyze_corpus(config);
        write_outputs(result, config);
        return 0;
    } catch (const std::exception& e) {
        err << "textscale: " << e.what() << "\n";
        return 1;
    }
}

FileAnalysis analyze_file(const fs::path& path, const RunConfig& config, bool raw_compression) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PathNotFound(path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string raw = buf.str();

    const TokenSequence seq = normalize_and_tokenize(raw, config.tokenize, path.string());
    if (seq.size() < 2 * config.segment_size) {
        throw TooFewSegments(seq.size(), config.segment_size);
    }

    FileAnalysis analysis;
    analysis.utf8_replacements = seq.utf8_replacements();
    analysis.signature = compute_signature(seq.view(), path.string(), 0, config,
                                           &analysis.curve, &analysis.dispersion);
    if (raw_compression) {
        analysis.raw_compression = compression_rate_raw(raw, config.compression_level);
    }
    return analysis;
}

void print_file_analysis(std::ostream& out, const fs::path& path, const FileAnalysis& analysis,
                         const RunConfig& config) {
    const auto& sig = analysis.signature;
    out << "file: " << path.string() << "\n";
    out << "tokens: " << sig.n_tokens << "  types: " << sig.n_types
        << "  utf8_replacements: " << analysis.utf8_replacements << "\n";
    out << "heaps_beta: " << format_metric(sig.beta.exponent) << "  (stderr "
        << format_metric(sig.beta.stderr_exponent) << ", r2 "
        << format_metric(sig.beta.r_squared) << ", points " << sig.beta.n_points << ", min_n "
        << config.min_fit_n << ")\n";
    out << "taylor_alpha: " << format_metric(sig.alpha.exponent) << "  (stderr "
        << format_metric(sig.alpha.stderr_exponent) << ", r2 "
        << format_metric(sig.alpha.r_squared) << ", points " << sig.alpha.n_points
        << ", segment_size " << analysis.dispersion.segment_size << ", segments "
        << analysis.dispersion.n_segments << ", excluded "
        << analysis.dispersion.excluded.size() << ")\n";
    out << "compression: raw " << sig.redundancy.raw_bytes << " B  compressed "
        << sig.redundancy.compressed_bytes << " B  r " << format_metric(sig.redundancy.r)
        << "  (" << kCompressorId << " level " << config.compression_level << ")\n";
    if (analysis.raw_compression) {
        out << "compression(raw file): raw " << analysis.raw_compression->raw_bytes
            << " B  compressed " << analysis.raw_compression->compressed_bytes << " B  r "
            << format_metric(analysis.raw_compression->r) << "\n";
    }
    out << "entropy: H " << format_metric(sig.redundancy.h_bits) << " bits/word  H_norm "
        << (sig.redundancy.h_norm ? format_metric(*sig.redundancy.h_norm) : "undefined")
        << "\n";
}

} // namespace textscale
