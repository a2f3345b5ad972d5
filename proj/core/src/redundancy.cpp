#include "textscale/redundancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include <zlib.h>

#include "textscale/errors.hpp"

namespace textscale {
namespace {

std::vector<std::uint64_t> word_counts(const TokenView& view) {
    std::vector<std::uint64_t> counts(view.vocab->size(), 0);
    for (const std::uint32_t id : view.ids) ++counts[id];
    return counts;
}

} // namespace

std::uint64_t gzip_compressed_size(std::string_view bytes, int level) {
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    // windowBits 15+16 selects the gzip container around raw DEFLATE.
    if (deflateInit2(&zs, level, Z_DEFLATED, 15 + 16, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
        throw Error("deflateInit2 failed");
    }

    // Zero the mtime and pin the OS byte so identical input always counts
    // the same number of output bytes, on any host.
    gz_header header;
    std::memset(&header, 0, sizeof(header));
    header.os = 3; // unix
    deflateSetHeader(&zs, &header);

    std::uint64_t total = 0;
    unsigned char out[1 << 15];
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(bytes.data()));
    zs.avail_in = static_cast<uInt>(bytes.size());

    int rc = Z_OK;
    do {
        zs.next_out = out;
        zs.avail_out = sizeof(out);
        rc = deflate(&zs, Z_FINISH);
        if (rc == Z_STREAM_ERROR) {
            deflateEnd(&zs);
            throw Error("deflate failed");
        }
        total += sizeof(out) - zs.avail_out;
    } while (rc != Z_STREAM_END);

    deflateEnd(&zs);
    return total;
}

CompressionResult compression_rate_raw(std::string_view bytes, int level) {
    if (bytes.empty()) throw EmptyDocument("compression_rate");
    CompressionResult result;
    result.raw_bytes = bytes.size();
    result.compressed_bytes = gzip_compressed_size(bytes, level);
    result.r = static_cast<double>(result.raw_bytes) /
               static_cast<double>(result.compressed_bytes);
    return result;
}

CompressionResult compression_rate(const TokenView& view, int level) {
    if (view.empty()) throw EmptyDocument("compression_rate");
    return compression_rate_raw(join_tokens(view), level);
}

double shannon_entropy(const TokenView& view) {
    if (view.empty()) throw EmptyDocument("shannon_entropy");
    const auto counts = word_counts(view);
    const auto n = static_cast<double>(view.size());
    double h = 0.0;
    for (const std::uint64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double normalized_entropy(const TokenView& view) {
    if (view.empty()) throw EmptyDocument("normalized_entropy");
    const auto counts = word_counts(view);
    std::uint64_t types = 0;
    const auto n = static_cast<double>(view.size());
    double h = 0.0;
    for (const std::uint64_t c : counts) {
        if (c == 0) continue;
        ++types;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    if (types < 2) throw UndefinedForSingletonVocabulary();
    return h / std::log2(static_cast<double>(types));
}

RedundancyMetrics redundancy_metrics(const TokenView& view, int level) {
    if (view.empty()) throw EmptyDocument("redundancy_metrics");
    RedundancyMetrics m;
    const CompressionResult c = compression_rate(view, level);
    m.r = c.r;
    m.raw_bytes = c.raw_bytes;
    m.compressed_bytes = c.compressed_bytes;

    const auto counts = word_counts(view);
    const auto n = static_cast<double>(view.size());
    std::uint64_t types = 0;
    double h = 0.0;
    for (const std::uint64_t cnt : counts) {
        if (cnt == 0) continue;
        ++types;
        const double p = static_cast<double>(cnt) / n;
        h -= p * std::log2(p);
    }
    m.h_bits = h;
    if (types >= 2) m.h_norm = h / std::log2(static_cast<double>(types));
    return m;
}

std::vector<RankFrequency> zipf_rank_frequency(const TokenView& view) {
    if (view.empty()) throw EmptyDocument("zipf_rank_frequency");
    const auto counts = word_counts(view);

    std::vector<RankFrequency> table;
    for (std::uint32_t id = 0; id < counts.size(); ++id) {
        if (counts[id] > 0) table.push_back({0, counts[id], view.vocab->token(id)});
    }
    std::sort(table.begin(), table.end(), [](const RankFrequency& a, const RankFrequency& b) {
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.word < b.word;
    });
    for (std::size_t i = 0; i < table.size(); ++i) table[i].rank = i + 1;
    return table;
}

} // namespace textscale
