#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "textscale/rng.hpp"
#include "textscale/token_sequence.hpp"

namespace textscale {

// Deterministic synthetic-text recipe: same spec, same token stream.
struct SyntheticSpec {
    std::uint64_t vocab_size = 1;
    double zipf_exponent = 0.0; // 0 = uniform over ranks
    std::uint64_t length = 0;
    std::uint64_t seed = 0;
};

// Draws ranks from P(rank k) proportional to k^(-exponent), k in
// [1, vocab_size]. Small vocabularies use inverse-CDF binary search over
// precomputed cumulative weights; vocabularies too large to tabulate use
// Hormann-Derflinger rejection-inversion, which samples the identical
// distribution in O(1) per draw without the table.
class ZipfSampler {
public:
    enum class Strategy { auto_select, cdf_table, rejection };

    ZipfSampler(std::uint64_t vocab_size, double exponent,
                Strategy strategy = Strategy::auto_select);

    std::uint64_t draw(Rng& rng) const; // rank in [1, vocab_size]

    Strategy active_strategy() const { return strategy_; }

    // Largest vocabulary tabulated by auto_select before switching to
    // rejection-inversion.
    static constexpr std::uint64_t kMaxTableSize = 1u << 22;

private:
    std::uint64_t draw_from_table(Rng& rng) const;
    std::uint64_t draw_rejection(Rng& rng) const;

    std::uint64_t vocab_size_;
    double exponent_;
    Strategy strategy_;

    std::vector<double> cdf_; // cumulative weights, table strategy only

    // rejection-inversion precomputed bounds
    double h_x1_ = 0.0;
    double h_n_ = 0.0;
    double s_ = 0.0;
};

// i.i.d. stream from the rank distribution; tokens are named "w<rank>".
TokenSequence generate(const SyntheticSpec& spec);

// Uniform random permutation (Fisher-Yates) of the tokens, preserving the
// multiset exactly. The vocabulary is shared with the input, so word ids,
// counts and the joined byte length are unchanged.
TokenSequence shuffle(const TokenSequence& seq, std::uint64_t seed);

} // namespace textscale
