#pragma once

#include <cstdint>
#include <cstring>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textscale {

// Append-only token interner. One Vocabulary is shared by every sequence
// derived from the same corpus concatenation, so token ids are comparable
// across chunks. Interning sits on the ingest hot path, so the index is an
// open-addressing table rather than unordered_map. Not thread-safe while
// interning; immutable use is safe to share across threads.
class Vocabulary {
public:
    Vocabulary() : slots_(kInitialSlots, kEmpty), mask_(kInitialSlots - 1) {}

    std::uint32_t intern(std::string_view word) {
        const std::uint64_t h = hash_bytes(word);
        std::size_t i = h & mask_;
        while (slots_[i] != kEmpty) {
            const std::uint32_t id = slots_[i];
            if (hashes_[id] == h && by_id_[id] == word) return id;
            i = (i + 1) & mask_;
        }
        storage_.emplace_back(word);
        const auto id = static_cast<std::uint32_t>(by_id_.size());
        by_id_.emplace_back(storage_.back());
        hashes_.push_back(h);
        slots_[i] = id;
        if (by_id_.size() * 10 >= slots_.size() * 7) grow();
        return id;
    }

    std::string_view token(std::uint32_t id) const { return by_id_[id]; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(by_id_.size()); }

private:
    static constexpr std::size_t kInitialSlots = 1 << 12;
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    static std::uint64_t hash_bytes(std::string_view s) {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (s.size() * 0xff51afd7ed558ccdULL);
        std::size_t i = 0;
        while (i + 8 <= s.size()) {
            std::uint64_t k;
            std::memcpy(&k, s.data() + i, 8);
            h = (h ^ k) * 0xff51afd7ed558ccdULL;
            h ^= h >> 29;
            i += 8;
        }
        std::uint64_t tail = 0;
        for (std::size_t j = i; j < s.size(); ++j) {
            tail = (tail << 8) | static_cast<unsigned char>(s[j]);
        }
        h = (h ^ tail) * 0xc4ceb9fe1a85ec53ULL;
        h ^= h >> 32;
        return h;
    }

    void grow() {
        std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
        const std::size_t mask = fresh.size() - 1;
        for (std::uint32_t id = 0; id < by_id_.size(); ++id) {
            std::size_t i = hashes_[id] & mask;
            while (fresh[i] != kEmpty) i = (i + 1) & mask;
            fresh[i] = id;
        }
        slots_ = std::move(fresh);
        mask_ = mask;
    }

    std::deque<std::string> storage_; // stable addresses for the views below
    std::vector<std::string_view> by_id_;
    std::vector<std::uint64_t> hashes_;
    std::vector<std::uint32_t> slots_;
    std::size_t mask_;
};

// Non-owning window over a token id stream plus the vocabulary that decodes
// it. All per-chunk metrics operate on views.
struct TokenView {
    std::span<const std::uint32_t> ids;
    const Vocabulary* vocab = nullptr;

    std::size_t size() const { return ids.size(); }
    bool empty() const { return ids.empty(); }
    std::string_view token(std::size_t i) const { return vocab->token(ids[i]); }
};

// Normalized token stream for one document or one concatenated category.
// Immutable after construction.
class TokenSequence {
public:
    TokenSequence() = default;
    TokenSequence(std::shared_ptr<const Vocabulary> vocab, std::vector<std::uint32_t> ids,
                  std::string source_id, std::uint64_t byte_length,
                  std::uint64_t utf8_replacements)
        : vocab_(std::move(vocab)),
          ids_(std::move(ids)),
          source_id_(std::move(source_id)),
          byte_length_(byte_length),
          utf8_replacements_(utf8_replacements) {}

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    std::uint32_t id(std::size_t i) const { return ids_[i]; }
    std::string_view token(std::size_t i) const { return vocab_->token(ids_[i]); }

    const Vocabulary& vocab() const { return *vocab_; }
    std::shared_ptr<const Vocabulary> vocab_ptr() const { return vocab_; }
    const std::string& source_id() const { return source_id_; }

    // Byte count of the normalized text (tokens joined by single spaces).
    std::uint64_t byte_length() const { return byte_length_; }
    // How many invalid UTF-8 bytes were replaced during normalization.
    std::uint64_t utf8_replacements() const { return utf8_replacements_; }

    TokenView view() const { return {std::span<const std::uint32_t>(ids_), vocab_.get()}; }
    TokenView view(std::size_t offset, std::size_t count) const {
        return {std::span<const std::uint32_t>(ids_).subspan(offset, count), vocab_.get()};
    }

private:
    std::shared_ptr<const Vocabulary> vocab_;
    std::vector<std::uint32_t> ids_;
    std::string source_id_;
    std::uint64_t byte_length_ = 0;
    std::uint64_t utf8_replacements_ = 0;
};

// Byte length of a view's tokens joined by single spaces.
std::uint64_t joined_byte_length(const TokenView& view);

// The space-joined normalized text itself.
std::string join_tokens(const TokenView& view);

} // namespace textscale
