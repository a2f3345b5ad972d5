#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "fixtures.hpp"
#include "textscale/errors.hpp"
#include "textscale/synthetic.hpp"
#include "textscale/taylor.hpp"
#include "textscale/tokenizer.hpp"

using namespace textscale;

namespace {

std::map<std::string, DispersionEntry> by_word(const TokenSequence& seq,
                                               const std::vector<DispersionEntry>& entries) {
    std::map<std::string, DispersionEntry> out;
    for (const auto& e : entries) out[std::string(seq.vocab().token(e.word_id))] = e;
    return out;
}

} // namespace

TEST_CASE("perfectly periodic text excludes every word") {
    const TokenSequence seq = normalize_and_tokenize("a b a b", {}, "t");
    const DispersionPoints points = dispersion(seq.view(), 2);
    CHECK(points.n_segments == 2);
    CHECK(points.retained.empty());
    REQUIRE(points.excluded.size() == 2);
    const auto excluded = by_word(seq, points.excluded);
    CHECK(excluded.at("a").mu == 1.0);
    CHECK(excluded.at("a").sigma == 0.0);
    CHECK(excluded.at("b").mu == 1.0);
    CHECK_THROWS_AS(taylor_alpha(points), FewerThanTwoPoints);
}

TEST_CASE("a a b b hand-counted dispersion") {
    const TokenSequence seq = normalize_and_tokenize("a a b b", {}, "t");
    const DispersionPoints points = dispersion(seq.view(), 2);
    REQUIRE(points.retained.size() == 2);
    const auto retained = by_word(seq, points.retained);
    CHECK(retained.at("a").mu == 1.0);
    CHECK(retained.at("a").sigma == 1.0);
    CHECK(retained.at("b").mu == 1.0);
    CHECK(retained.at("b").sigma == 1.0);
}

TEST_CASE("tail beyond the last full segment is ignored") {
    // 5 tokens at segment 2: segments [a b][a b], the trailing c dropped
    const TokenSequence seq = normalize_and_tokenize("a b a b c", {}, "t");
    const DispersionPoints points = dispersion(seq.view(), 2);
    CHECK(points.n_segments == 2);
    CHECK(points.retained.empty());
    CHECK(points.excluded.size() == 2); // c never appears in a counted segment
}

TEST_CASE("uniform ten types match the binomial oracle") {
    // counts per segment ~ Binomial(100, 0.1): mu = 10, sigma = 3.0
    const TokenSequence seq = generate({10, 0.0, 10000, 3});
    const DispersionPoints points = dispersion(seq.view(), 100);
    CHECK(points.n_segments == 100);
    REQUIRE(points.retained.size() == 10);
    for (const auto& e : points.retained) {
        CHECK(e.mu == doctest::Approx(10.0).epsilon(0.12));
        CHECK(e.sigma > 2.5);
        CHECK(e.sigma < 3.5);
    }
}

TEST_CASE("iid zipf stream lands in the simulation band") {
    // Band derived by tests/support/derive_bands (20 seeds, mean +/- 3 sd)
    // for i.i.d. Zipf s=1.0 over 1e4 ranks, N=3e5, segment 1000:
    // [0.498503, 0.500514]. This is the exchangeable-stream alpha = 0.5.
    const TokenSequence seq = generate({10000, 1.0, 300000, 41});
    const PowerLawFit alpha = taylor_alpha(dispersion(seq.view(), 1000));
    CHECK(alpha.exponent > 0.498503);
    CHECK(alpha.exponent < 0.500514);
    CHECK(std::abs(alpha.exponent - 0.5) < 0.05);
}

TEST_CASE("relabeling words bijectively changes nothing") {
    const TokenSequence seq = generate({500, 1.0, 40000, 13});
    const PowerLawFit alpha = taylor_alpha(dispersion(seq.view(), 400));

    // rename every token by prefixing: ids keep their meaning, strings differ
    auto vocab = std::make_shared<Vocabulary>();
    std::vector<std::uint32_t> ids;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        ids.push_back(vocab->intern("x" + std::string(seq.token(i))));
    }
    const TokenSequence renamed(std::move(vocab), std::move(ids), "renamed", 0, 0);
    const PowerLawFit again = taylor_alpha(dispersion(renamed.view(), 400));
    CHECK(alpha.exponent == again.exponent);
    CHECK(alpha.r_squared == again.r_squared);
}

TEST_CASE("permuting whole segments leaves every mu and sigma unchanged") {
    const TokenSequence seq = generate({300, 0.8, 12000, 29});
    const std::size_t segment = 500;
    const DispersionPoints base = dispersion(seq.view(), segment);

    // rebuild the stream with segments in reversed order
    std::vector<std::uint32_t> ids;
    const std::size_t n_segments = seq.size() / segment;
    for (std::size_t s = n_segments; s-- > 0;) {
        for (std::size_t i = 0; i < segment; ++i) ids.push_back(seq.id(s * segment + i));
    }
    // carry the tail so sizes match
    for (std::size_t i = n_segments * segment; i < seq.size(); ++i) ids.push_back(seq.id(i));
    const TokenSequence permuted(seq.vocab_ptr(), std::move(ids), "permuted",
                                 seq.byte_length(), 0);
    const DispersionPoints moved = dispersion(permuted.view(), segment);

    REQUIRE(base.retained.size() == moved.retained.size());
    REQUIRE(base.excluded.size() == moved.excluded.size());
    for (std::size_t i = 0; i < base.retained.size(); ++i) {
        CHECK(base.retained[i].word_id == moved.retained[i].word_id);
        CHECK(base.retained[i].mu == moved.retained[i].mu);
        CHECK(base.retained[i].sigma == moved.retained[i].sigma);
    }
    const PowerLawFit a = taylor_alpha(base);
    const PowerLawFit b = taylor_alpha(moved);
    CHECK(a.exponent == b.exponent);
}

TEST_CASE("shuffling natural-like text drives alpha to one half") {
    const std::string text = fixtures::novel_text(120000, 3);
    const TokenSequence seq = normalize_and_tokenize(text, {}, "novel");
    const PowerLawFit before = taylor_alpha(dispersion(seq.view(), 1000));
    CHECK(before.exponent > 0.55); // clustered before shuffling

    const TokenSequence mixed = shuffle(seq, 4242);
    const PowerLawFit after = taylor_alpha(dispersion(mixed.view(), 1000));
    CHECK(after.exponent > 0.45);
    CHECK(after.exponent < 0.55);
}

TEST_CASE("error contracts") {
    const TokenSequence seq = normalize_and_tokenize("a b c d e f", {}, "t");
    CHECK_THROWS_AS(dispersion(seq.view(), 4), TooFewSegments);
    CHECK_THROWS_AS(dispersion(seq.view(), 0), Error);
    CHECK_NOTHROW(dispersion(seq.view(), 3));
}
