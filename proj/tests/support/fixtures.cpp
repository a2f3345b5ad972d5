#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>
#include <vector>

#include "textscale/rng.hpp"

namespace fixtures {
namespace {

using textscale::Rng;

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// pseudo-word construction
// ---------------------------------------------------------------------------

constexpr std::array<const char*, 32> kOnsets{
    "b",  "c",  "d",  "f",  "g",  "h",  "l",  "m",  "n",  "p",  "r",
    "s",  "t",  "v",  "w",  "k",  "j",  "z",  "th", "st", "ch", "br",
    "gr", "pl", "tr", "sh", "cl", "fr", "sp", "dr", "qu", "sl"};

constexpr std::array<const char*, 8> kNuclei{"a", "e", "i", "o", "u", "ea", "ou", "ai"};

constexpr std::array<const char*, 16> kCodas{"",  "n",  "r",  "s",  "l",  "t",  "nd", "st",
                                             "m", "ck", "ng", "th", "ry", "p",  "d",  "w"};

constexpr std::array<const char*, 64> kFunctionWords{
    "the",  "of",    "and",  "a",     "to",    "in",   "he",    "was",  "that",  "it",
    "his",  "her",   "she",  "with",  "as",    "had",  "for",   "at",   "but",   "on",
    "not",  "they",  "you",  "him",   "be",    "said", "from",  "were", "by",    "all",
    "this", "when",  "is",   "there", "them",  "one",  "so",    "have", "no",    "if",
    "out",  "up",    "into", "which", "would", "then", "what",  "an",   "could", "more",
    "now",  "about", "who",  "their", "we",    "me",   "been",  "down", "over",  "like",
    "some", "after", "only", "never"};

// Distinct pseudo-word per rank: mixed-radix digits of the rank select
// onset/nucleus pairs (innermost digit also picks a coda), giving
// English-like consonant-vowel byte statistics with high bigram diversity.
// The per-position rotation only reshuffles which digit picks which unit,
// so the mapping stays injective.
std::string word_for_rank(std::uint64_t rank) {
    if (rank <= kFunctionWords.size()) return kFunctionWords[rank - 1];
    std::uint64_t v = rank - kFunctionWords.size() - 1;

    std::string word;
    std::size_t pos = 0;
    const std::uint64_t coda = v % kCodas.size();
    v /= kCodas.size();
    do {
        const std::uint64_t onset = v % kOnsets.size();
        v /= kOnsets.size();
        const std::uint64_t nucleus = v % kNuclei.size();
        v /= kNuclei.size();
        word += kOnsets[(onset + 7 * pos) % kOnsets.size()];
        word += kNuclei[(nucleus + 3 * pos) % kNuclei.size()];
        ++pos;
    } while (v > 0);
    word += kCodas[coda];
    return word;
}

// ---------------------------------------------------------------------------
// novel_text
// ---------------------------------------------------------------------------

struct NovelModel {
    static constexpr std::uint64_t kVocab = 100000;
    static constexpr std::size_t kTopics = 64;
    // Two-regime rank weights: a flat head keeps unigram entropy close to
    // prose, the steeper tail paces vocabulary growth.
    static constexpr double kHeadExponent = 1.0;
    static constexpr double kTailExponent = 1.45;
    static constexpr std::uint64_t kKnee = 1500;
    // Content words are mostly routed through their episode topics; a small
    // background share lets any word stray into any scene.
    static constexpr double kTopicShare = 0.85;
    static constexpr std::size_t kActiveTopics = 4;
    static constexpr double kFunctionJitter = 0.35; // lognormal sigma for topic 0

    std::vector<double> base_weight; // rank - 1 indexed
    std::vector<std::uint16_t> topic;

    NovelModel() {
        base_weight.resize(kVocab);
        topic.resize(kVocab);
        const double knee_weight =
            std::pow(static_cast<double>(kKnee), -kHeadExponent);
        for (std::uint64_t r = 1; r <= kVocab; ++r) {
            base_weight[r - 1] =
                r <= kKnee ? std::pow(static_cast<double>(r), -kHeadExponent)
                           : knee_weight * std::pow(static_cast<double>(r) /
                                                        static_cast<double>(kKnee),
                                                    -kTailExponent);
            topic[r - 1] = r <= kFunctionWords.size()
                               ? 0
                               : static_cast<std::uint16_t>(1 + mix(r) % (kTopics - 1));
        }
    }
};

const NovelModel& novel_model() {
    static const NovelModel model;
    return model;
}

} // namespace

std::string novel_text(std::uint64_t n_tokens, std::uint64_t seed) {
    const NovelModel& model = novel_model();
    Rng rng(mix(seed) ^ 0x6e6f76656cULL);

    std::string text;
    text.reserve(n_tokens * 7);

    std::vector<double> cdf(NovelModel::kVocab);
    std::array<double, NovelModel::kTopics> boost{};

    std::uint64_t produced = 0;
    std::size_t sentence_left = 9;
    std::size_t paragraph_left = 70;
    bool capitalize = true;

    while (produced < n_tokens) {
        // One episode: a topical scene. A handful of active topics carry
        // the routed share; everything else idles at the background rate.
        const std::uint64_t episode_len = 1500 + rng.below(4500);

        boost.fill(0.0);
        for (std::size_t i = 0; i < NovelModel::kActiveTopics; ++i) {
            const auto t = 1 + rng.below(NovelModel::kTopics - 1);
            boost[t] += static_cast<double>(NovelModel::kTopics - 1) /
                        static_cast<double>(NovelModel::kActiveTopics);
        }
        // Function words wobble between scenes instead of switching on/off.
        const double z = std::sqrt(-2.0 * std::log(1.0 - rng.uniform01() + 1e-300)) *
                         std::cos(6.283185307179586 * rng.uniform01());
        const double fn_jitter = std::exp(NovelModel::kFunctionJitter * z -
                                          0.5 * NovelModel::kFunctionJitter *
                                              NovelModel::kFunctionJitter);

        double acc = 0.0;
        for (std::uint64_t r = 0; r < NovelModel::kVocab; ++r) {
            const double m =
                model.topic[r] == 0
                    ? fn_jitter
                    : (1.0 - NovelModel::kTopicShare) +
                          NovelModel::kTopicShare * boost[model.topic[r]];
            acc += model.base_weight[r] * m;
            cdf[r] = acc;
        }

        for (std::uint64_t i = 0; i < episode_len && produced < n_tokens; ++i) {
            const double u = rng.uniform01() * acc;
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const std::uint64_t rank = static_cast<std::uint64_t>(it - cdf.begin()) + 1;

            std::string word = word_for_rank(rank);
            if (capitalize) {
                word[0] = static_cast<char>(word[0] - 'a' + 'A');
                capitalize = false;
            }
            text += word;
            ++produced;

            if (--sentence_left == 0) {
                sentence_left = 5 + rng.below(14);
                text += '.';
                capitalize = true;
            } else if (rng.below(12) == 0) {
                text += ',';
            }
            if (--paragraph_left == 0) {
                paragraph_left = 50 + rng.below(60);
                text += "\n\n";
            } else {
                text += ' ';
            }
        }
    }
    text += '\n';
    return text;
}

// ---------------------------------------------------------------------------
// statute_text
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<const char*, 14> kEntities{
    "secretary",  "administrator", "commission", "director", "agency",
    "board",      "comptroller",   "governor",   "attorney", "trustee",
    "department", "commissioner",  "registrar",  "treasurer"};

constexpr std::array<const char*, 16> kVerbs{
    "prescribe", "administer", "enforce",  "certify",  "designate", "establish",
    "maintain",  "furnish",    "transmit", "allocate", "determine", "approve",
    "review",    "suspend",    "revoke",   "record"};

// Clause templates. Slots: %T defined term, %E entity, %V verb, %R internal
// reference, %N fresh number. The literal runs between slots are what gzip
// keeps finding again and again, as in real statutory drafting.
constexpr std::array<const char*, 18> kTemplates{
    "Notwithstanding any other provision of this title, the %E shall %V the %T in accordance "
    "with %R.",
    "For the purposes of this section, the term %T means any %T that the %E may %V under %R.",
    "The %E may by regulation %V such %T as may be necessary to carry out the provisions of "
    "%R.",
    "Except as provided in %R, no %T shall be subject to the requirements of this section.",
    "The %E shall, not later than %N days after the date of enactment of this title, %V each "
    "%T described in %R.",
    "Any person who fails to %V a %T required under %R shall be liable for a civil penalty "
    "of not more than %N dollars.",
    "Nothing in this section shall be construed to limit the authority of the %E to %V any "
    "%T under %R.",
    "In this title, the term %T includes any %T established pursuant to %R.",
    "The %E shall %V and make available to the public a list of each %T designated under "
    "%R.",
    "Subject to the provisions of %R, the %E may %V the %T upon application by any "
    "interested party.",
    "Each %T shall be subject to review by the %E in accordance with the procedures set "
    "forth in %R.",
    "Amounts appropriated under %R shall remain available until expended to %V the %T.",
    "The requirements of %R shall not apply to any %T that the %E determines to be exempt.",
    "On and after the effective date of this section, each %E shall %V all records relating "
    "to the %T.",
    "The %E shall prescribe such regulations as may be necessary to %V the provisions of "
    "%R with respect to each %T.",
    "A %T approved under %R shall remain in effect for a period of not more than %N years.",
    "Whoever knowingly violates %R shall %V the %T to the %E within %N days.",
    "As used in this section, the term %T has the meaning given such term in %R.",
};

} // namespace

std::string statute_text(std::uint64_t n_tokens, std::uint64_t seed) {
    Rng rng(mix(seed) ^ 0x73746174ULL);

    // Document-wide glossary of defined terms, Zipf-weighted; each "title"
    // (a run of sections) works from its own focus subset, so terms cluster
    // the way real drafting clusters them.
    constexpr std::size_t kGlossary = 360;
    constexpr std::size_t kFocus = 24;
    std::vector<std::string> terms;
    terms.reserve(kGlossary);
    for (std::size_t i = 0; i < kGlossary; ++i) {
        terms.push_back(word_for_rank(kFunctionWords.size() + 1 + mix(900 + i) % 60000));
    }
    std::vector<double> term_cdf(kGlossary);
    double glossary_acc = 0.0;
    for (std::size_t i = 0; i < kGlossary; ++i) {
        glossary_acc += std::pow(static_cast<double>(i + 1), -0.9);
        term_cdf[i] = glossary_acc;
    }

    // A "title" is a run of sections sharing focus terms and favoured
    // templates; rates therefore swing title to title, the way drafting
    // conventions swing between parts of a real code.
    constexpr std::uint64_t kSectionsPerTitle = 36;
    constexpr std::size_t kTemplateFocus = 6;
    std::array<std::size_t, kFocus> focus{};
    std::array<std::size_t, kTemplateFocus> template_focus{};
    auto refresh_focus = [&] {
        for (auto& f : focus) f = rng.below(kGlossary);
        for (auto& t : template_focus) t = rng.below(kTemplates.size());
    };
    refresh_focus();

    auto draw_term = [&]() -> const std::string& {
        // 70% from the title's focus set, the rest from the full glossary
        if (rng.below(10) < 7) return terms[focus[rng.below(kFocus)]];
        const double u = rng.uniform01() * glossary_acc;
        const auto it = std::upper_bound(term_cdf.begin(), term_cdf.end(), u);
        return terms[static_cast<std::size_t>(it - term_cdf.begin())];
    };

    auto draw_template = [&]() -> const char* {
        if (rng.below(10) < 8) return kTemplates[template_focus[rng.below(kTemplateFocus)]];
        return kTemplates[rng.below(kTemplates.size())];
    };

    std::string text;
    text.reserve(n_tokens * 8);
    std::uint64_t produced = 0;
    std::uint64_t section = 0;

    auto emit = [&](std::string_view w) {
        text += w;
        text += ' ';
        ++produced;
    };

    while (produced < n_tokens) {
        ++section;
        if (section % kSectionsPerTitle == 1) refresh_focus(); // new title

        emit("Section");
        emit(std::to_string(100 + section) + ".");
        emit(draw_term());
        text += "\n";

        const std::uint64_t clauses = 4 + rng.below(9);
        for (std::uint64_t c = 0; c < clauses && produced < n_tokens; ++c) {
            emit("(" + std::string(1, static_cast<char>('a' + (c % 26))) + ")");

            const char* tpl = draw_template();
            std::string word;
            for (const char* p = tpl; *p != '\0'; ++p) {
                if (*p == '%') {
                    ++p;
                    switch (*p) {
                    case 'T': word += draw_term(); break;
                    case 'E': word += kEntities[rng.below(kEntities.size())]; break;
                    case 'V': word += kVerbs[rng.below(kVerbs.size())]; break;
                    case 'R': {
                        // references cluster near the current section
                        const std::uint64_t target =
                            100 + (section > 4 ? section - rng.below(5) : section);
                        emit("section");
                        word += std::to_string(target);
                        break;
                    }
                    case 'N': word += std::to_string(10 + rng.below(90) * 5); break;
                    default: word += *p; break;
                    }
                } else if (*p == ' ') {
                    if (!word.empty()) {
                        emit(word);
                        word.clear();
                    }
                } else {
                    word += *p;
                }
            }
            if (!word.empty()) emit(word);
            text += "\n";
        }
        text += "\n";
    }
    return text;
}

} // namespace fixtures
