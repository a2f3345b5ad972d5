#pragma once

#include <cstddef>
#include <vector>

#include "textscale/token_sequence.hpp"

namespace textscale {

// Contiguous slice of a parent sequence. Every chunk except possibly the
// last holds exactly target_size tokens.
struct Chunk {
    std::size_t index = 0;
    std::size_t offset = 0;
    std::size_t size = 0;
    std::size_t target_size = 0;
};

struct ChunkingResult {
    std::vector<Chunk> chunks;
    std::size_t dropped_tail_tokens = 0;
};

// Cuts a sequence into fixed-size chunks. A final partial chunk is retained
// only when it holds at least half of target; otherwise it is dropped and
// reported via dropped_tail_tokens. Retained sizes plus the dropped tail
// always sum to the input length.
ChunkingResult chunk(const TokenSequence& seq, std::size_t target);
ChunkingResult chunk_ids(std::size_t n_tokens, std::size_t target);

} // namespace textscale
