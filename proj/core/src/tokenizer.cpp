#include "textscale/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "textscale/errors.hpp"

namespace textscale {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 sequence starting at pos. On malformed input returns
// U+FFFD and consumes a single byte.
struct Decoded {
    char32_t cp;
    std::size_t length;
    bool invalid;
};

Decoded decode_utf8(std::string_view s, std::size_t pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1, false};
    auto cont = [&](std::size_t i) {
        return pos + i < s.size() && (static_cast<unsigned char>(s[pos + i]) & 0xC0) == 0x80;
    };
    auto bits = [&](std::size_t i) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3F);
    };
    if ((b0 & 0xE0) == 0xC0) {
        if (!cont(1)) return {kReplacement, 1, true};
        const char32_t cp = ((b0 & 0x1FU) << 6) | bits(1);
        if (cp < 0x80) return {kReplacement, 1, true}; // overlong
        return {cp, 2, false};
    }
    if ((b0 & 0xF0) == 0xE0) {
        if (!cont(1) || !cont(2)) return {kReplacement, 1, true};
        const char32_t cp = ((b0 & 0x0FU) << 12) | (bits(1) << 6) | bits(2);
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return {kReplacement, 1, true};
        return {cp, 3, false};
    }
    if ((b0 & 0xF8) == 0xF0) {
        if (!cont(1) || !cont(2) || !cont(3)) return {kReplacement, 1, true};
        const char32_t cp = ((b0 & 0x07U) << 18) | (bits(1) << 12) | (bits(2) << 6) | bits(3);
        if (cp < 0x10000 || cp > 0x10FFFF) return {kReplacement, 1, true};
        return {cp, 4, false};
    }
    return {kReplacement, 1, true};
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

struct CpRange {
    char32_t lo;
    char32_t hi;
};

// Unicode general category P* for the scripts this toolkit targets
// (Latin-script corpora plus common general/CJK punctuation). Sorted.
constexpr std::array<CpRange, 21> kPunctRanges{{
    {0x0021, 0x0023}, // ! " #
    {0x0025, 0x002A}, // % & ' ( ) *
    {0x002C, 0x002F}, // , - . /
    {0x003A, 0x003B}, // : ;
    {0x003F, 0x0040}, // ? @
    {0x005B, 0x005D}, // [ \ ]
    {0x005F, 0x005F}, // _
    {0x007B, 0x007B}, // {
    {0x007D, 0x007D}, // }
    {0x00A1, 0x00A1}, // inverted exclamation
    {0x00A7, 0x00A7}, // section sign
    {0x00AB, 0x00AB}, // left guillemet
    {0x00B6, 0x00B7}, // pilcrow, middle dot
    {0x00BB, 0x00BB}, // right guillemet
    {0x00BF, 0x00BF}, // inverted question
    {0x2010, 0x2027}, // hyphens, dashes, quotes, daggers, ellipsis
    {0x2030, 0x205E}, // per mille .. general punctuation tail
    {0x3001, 0x3003}, // CJK comma, full stop, ditto
    {0x3008, 0x3011}, // CJK brackets
    {0x3014, 0x301F}, // CJK brackets and quotes
    {0xFF01, 0xFF0F}, // fullwidth ! .. /
}};

} // namespace

bool is_whitespace_cp(char32_t cp) {
    // Unicode White_Space property.
    switch (cp) {
    case 0x0009:
    case 0x000A:
    case 0x000B:
    case 0x000C:
    case 0x000D:
    case 0x0020:
    case 0x0085:
    case 0x00A0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punctuation_cp(char32_t cp) {
    auto it = std::upper_bound(kPunctRanges.begin(), kPunctRanges.end(), cp,
                               [](char32_t v, const CpRange& r) { return v < r.lo; });
    return it != kPunctRanges.begin() && cp <= std::prev(it)->hi;
}

char32_t to_lower_cp(char32_t cp) {
    // Simple Latin-script lowercase mapping (ASCII, Latin-1 Supplement,
    // Latin Extended-A). Other scripts pass through unchanged.
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF;
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    return cp;
}

TokenSequence normalize_and_tokenize(std::string_view raw, const TokenizeOptions& options,
                                     std::string source_id, std::shared_ptr<Vocabulary> vocab) {
    if (!vocab) vocab = std::make_shared<Vocabulary>();

    std::vector<std::uint32_t> ids;
    ids.reserve(raw.size() / 6 + 1);
    std::string current;
    std::uint64_t byte_length = 0;
    std::uint64_t replacements = 0;

    auto flush = [&] {
        if (current.empty()) return;
        ids.push_back(vocab->intern(current));
        byte_length += current.size() + 1;
        current.clear();
    };

    std::size_t pos = 0;
    while (pos < raw.size()) {
        char32_t cp;
        // ASCII fast path; everything else goes through the decoder.
        const auto b0 = static_cast<unsigned char>(raw[pos]);
        if (b0 < 0x80) {
            cp = b0;
            ++pos;
        } else {
            const Decoded d = decode_utf8(raw, pos);
            cp = d.cp;
            pos += d.length;
            if (d.invalid) ++replacements;
        }
        if (is_whitespace_cp(cp)) {
            flush();
            continue;
        }
        if (options.strip_punctuation && is_punctuation_cp(cp)) continue;
        if (options.case_fold) cp = to_lower_cp(cp);
        encode_utf8(cp, current);
    }
    flush();

    if (ids.empty()) throw EmptyDocument(source_id);
    byte_length -= 1; // no trailing space after the last token

    return TokenSequence(std::move(vocab), std::move(ids), std::move(source_id), byte_length,
                         replacements);
}

} // namespace textscale
