#include <benchmark/benchmark.h>

#include <string>

#include "fixtures.hpp"
#include "textscale/heaps.hpp"
#include "textscale/redundancy.hpp"
#include "textscale/synthetic.hpp"
#include "textscale/taylor.hpp"
#include "textscale/tokenizer.hpp"

using namespace textscale;

namespace {

const std::string& prose_text() {
    static const std::string text = fixtures::novel_text(300000, 1);
    return text;
}

const std::string& statute_text() {
    static const std::string text = fixtures::statute_text(300000, 1);
    return text;
}

const TokenSequence& prose_tokens() {
    static const TokenSequence seq = normalize_and_tokenize(prose_text(), {}, "prose");
    return seq;
}

} // namespace

static void BM_Tokenize(benchmark::State& state) {
    const std::string& text = prose_text();
    for (auto _ : state) {
        const TokenSequence seq = normalize_and_tokenize(text, {}, "prose");
        benchmark::DoNotOptimize(seq.size());
    }
    state.SetItemsProcessed(state.iterations() * 300000);
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_Tokenize)->Unit(benchmark::kMillisecond);

static void BM_GrowthCurveAndBeta(benchmark::State& state) {
    const TokenSequence& seq = prose_tokens();
    for (auto _ : state) {
        const PowerLawFit beta = heaps_beta(growth_curve(seq.view()));
        benchmark::DoNotOptimize(beta.exponent);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(seq.size()));
}
BENCHMARK(BM_GrowthCurveAndBeta)->Unit(benchmark::kMillisecond);

static void BM_DispersionAndAlpha(benchmark::State& state) {
    const TokenSequence& seq = prose_tokens();
    for (auto _ : state) {
        const PowerLawFit alpha = taylor_alpha(dispersion(seq.view(), 1000));
        benchmark::DoNotOptimize(alpha.exponent);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(seq.size()));
}
BENCHMARK(BM_DispersionAndAlpha)->Unit(benchmark::kMillisecond);

static void BM_CompressionRate(benchmark::State& state) {
    const TokenSequence& seq = prose_tokens();
    for (auto _ : state) {
        const CompressionResult r = compression_rate(seq.view());
        benchmark::DoNotOptimize(r.compressed_bytes);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(seq.size()));
}
BENCHMARK(BM_CompressionRate)->Unit(benchmark::kMillisecond);

static void BM_ShannonEntropy(benchmark::State& state) {
    const TokenSequence& seq = prose_tokens();
    for (auto _ : state) {
        benchmark::DoNotOptimize(shannon_entropy(seq.view()));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(seq.size()));
}
BENCHMARK(BM_ShannonEntropy)->Unit(benchmark::kMillisecond);

// End-to-end per-chunk suite, the number the throughput gate watches.
static void BM_FullSuite(benchmark::State& state) {
    const std::string& text = state.range(0) == 0 ? prose_text() : statute_text();
    for (auto _ : state) {
        const TokenSequence seq = normalize_and_tokenize(text, {}, "chunk");
        const PowerLawFit beta = heaps_beta(growth_curve(seq.view()));
        const PowerLawFit alpha = taylor_alpha(dispersion(seq.view(), 1000));
        const RedundancyMetrics red = redundancy_metrics(seq.view());
        benchmark::DoNotOptimize(beta.exponent + alpha.exponent + red.r);
    }
    state.SetItemsProcessed(state.iterations() * 300000);
    state.SetLabel(state.range(0) == 0 ? "prose" : "statute");
}
BENCHMARK(BM_FullSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ZipfSamplerTable(benchmark::State& state) {
    const ZipfSampler sampler(1000000, 1.0, ZipfSampler::Strategy::cdf_table);
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw(rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ZipfSamplerTable);

static void BM_ZipfSamplerRejection(benchmark::State& state) {
    const ZipfSampler sampler(1000000000ULL, 1.0, ZipfSampler::Strategy::rejection);
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.draw(rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ZipfSamplerRejection);

BENCHMARK_MAIN();
