#include "textscale/aggregate.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "textscale/errors.hpp"

namespace textscale {

MetricSummary summarize_values(std::span<const double> values) {
    MetricSummary s;
    s.n = values.size();
    if (values.empty()) {
        s.mean = std::nan("");
        s.stddev = std::nan("");
        return s;
    }
    double sum = 0.0;
    for (const double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (const double v : values) {
        const double d = v - s.mean;
        sq += d * d;
    }
    s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
    return s;
}

CategorySummary summarize(std::span<const ComplexitySignature> signatures,
                          const std::string& category, const CategoryCorpusInfo& info) {
    if (signatures.empty()) throw EmptyCategory(category);

    std::vector<double> betas;
    std::vector<double> alphas;
    std::vector<double> rs;
    std::vector<double> hnorms;
    for (const auto& sig : signatures) {
        betas.push_back(sig.beta.exponent);
        alphas.push_back(sig.alpha.exponent);
        rs.push_back(sig.redundancy.r);
        if (sig.redundancy.h_norm) hnorms.push_back(*sig.redundancy.h_norm);
    }

    CategorySummary summary;
    summary.category = category;
    summary.files_count = info.files_count;
    summary.total_words = info.total_words;
    summary.vocabulary = info.vocabulary;
    summary.avg_words_per_file =
        info.files_count > 0
            ? static_cast<double>(info.total_words) / static_cast<double>(info.files_count)
            : 0.0;
    summary.n_chunks = signatures.size();
    summary.beta = summarize_values(betas);
    summary.alpha = summarize_values(alphas);
    summary.r = summarize_values(rs);
    summary.h_norm = summarize_values(hnorms);
    return summary;
}

std::vector<BasicStats> basic_stats(const CorpusManifest& manifest,
                                    const TokenizeOptions& options) {
    std::vector<BasicStats> table;
    for (const auto& category : manifest.categories) {
        const auto files = category_files(category);
        if (files.empty()) throw EmptyCategory(category.name);

        auto vocab = std::make_shared<Vocabulary>();
        BasicStats stats;
        stats.category = category.name;
        stats.files_count = files.size();
        for (const auto& file : files) {
            std::ifstream in(file, std::ios::binary);
            if (!in) throw PathNotFound(file.string());
            std::ostringstream buf;
            buf << in.rdbuf();
            const TokenSequence seq =
                normalize_and_tokenize(buf.str(), options, file.string(), vocab);
            stats.total_words += seq.size();
        }
        stats.vocabulary = vocab->size();
        stats.avg_words_per_file =
            static_cast<double>(stats.total_words) / static_cast<double>(stats.files_count);
        table.push_back(std::move(stats));
    }
    return table;
}

} // namespace textscale
