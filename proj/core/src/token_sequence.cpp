#include "textscale/token_sequence.hpp"

namespace textscale {

std::uint64_t joined_byte_length(const TokenView& view) {
    if (view.empty()) return 0;
    std::uint64_t bytes = view.size() - 1; // one space between adjacent tokens
    for (std::uint32_t id : view.ids) bytes += view.vocab->token(id).size();
    return bytes;
}

std::string join_tokens(const TokenView& view) {
    std::string out;
    out.reserve(joined_byte_length(view));
    for (std::size_t i = 0; i < view.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out.append(view.token(i));
    }
    return out;
}

} // namespace textscale
