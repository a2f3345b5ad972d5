#include "textscale/chunker.hpp"

#include "textscale/errors.hpp"

namespace textscale {

ChunkingResult chunk_ids(std::size_t n_tokens, std::size_t target) {
    if (target < 1) throw Error("chunk target size must be >= 1");

    ChunkingResult result;
    const std::size_t full = n_tokens / target;
    const std::size_t remainder = n_tokens - full * target;

    result.chunks.reserve(full + 1);
    for (std::size_t i = 0; i < full; ++i) {
        result.chunks.push_back({i, i * target, target, target});
    }
    if (remainder > 0) {
        if (2 * remainder >= target) {
            result.chunks.push_back({full, full * target, remainder, target});
        } else {
            result.dropped_tail_tokens = remainder;
        }
    }
    return result;
}

ChunkingResult chunk(const TokenSequence& seq, std::size_t target) {
    return chunk_ids(seq.size(), target);
}

} // namespace textscale
