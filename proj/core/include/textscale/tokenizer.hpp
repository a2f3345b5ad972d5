#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "textscale/token_sequence.hpp"

namespace textscale {

struct TokenizeOptions {
    bool case_fold = true;         // lowercase every token
    bool strip_punctuation = true; // drop Unicode punctuation characters
};

// Normalizes a UTF-8 byte stream and splits it into whitespace-delimited
// word tokens. Invalid UTF-8 sequences are replaced by U+FFFD and counted.
// Throws EmptyDocument when nothing survives normalization.
//
// Pass a shared vocabulary to make ids comparable across documents of one
// corpus; with nullptr a fresh vocabulary is created.
TokenSequence normalize_and_tokenize(std::string_view raw, const TokenizeOptions& options,
                                     std::string source_id,
                                     std::shared_ptr<Vocabulary> vocab = nullptr);

// Character classes used by the tokenizer, exposed for tests.
bool is_whitespace_cp(char32_t cp);
bool is_punctuation_cp(char32_t cp);
char32_t to_lower_cp(char32_t cp);

} // namespace textscale
