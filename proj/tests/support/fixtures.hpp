#pragma once

// Deterministic fixture corpora for tests. The sandbox ships no copyrighted
// text, so the "novel" and "statute" inputs are generated: the novel
// generator produces prose-like token statistics (Zipfian vocabulary,
// episode-level topical clustering, super-Poisson dispersion), the statute
// generator produces clause-template text with a narrow defined-term
// glossary and heavy verbatim repetition. Same seed, same bytes, always.

#include <cstdint>
#include <string>

namespace fixtures {

std::string novel_text(std::uint64_t n_tokens, std::uint64_t seed);
std::string statute_text(std::uint64_t n_tokens, std::uint64_t seed);

} // namespace fixtures
