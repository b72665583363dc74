#include "striclcs/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace striclcs {

Sequence Sequence::from_bytes(std::string_view bytes) {
    std::vector<Token> tokens;
    tokens.reserve(bytes.size());
    for (unsigned char c : bytes) tokens.push_back(static_cast<Token>(c));
    return Sequence(std::move(tokens));
}

Sequence Sequence::slice1(int lo, int hi) const {
    if (lo > hi) return {};
    return Sequence(std::vector<Token>(tokens_.begin() + (lo - 1), tokens_.begin() + hi));
}

Sequence Sequence::reversed() const {
    return Sequence(std::vector<Token>(tokens_.rbegin(), tokens_.rend()));
}

std::string Sequence::to_bytes() const {
    std::string out;
    out.reserve(tokens_.size());
    for (Token t : tokens_) {
        if (t > 0xff) throw std::domain_error("Sequence::to_bytes: token does not fit in a byte");
        out.push_back(static_cast<char>(t));
    }
    return out;
}

bool is_subsequence(const Sequence& x, const Sequence& y) {
    auto xs = x.tokens();
    std::size_t next = 0;
    for (Token t : y.tokens()) {
        if (next < xs.size() && xs[next] == t) ++next;
    }
    return next == xs.size();
}

bool is_substring(const Sequence& x, const Sequence& y) {
    if (x.empty()) return true;
    auto xs = x.tokens();
    auto ys = y.tokens();
    return std::search(ys.begin(), ys.end(), xs.begin(), xs.end()) != ys.end();
}

MatchSet enumerate_matches(const Sequence& a, const Sequence& b, std::optional<Token> filter) {
    // Bucket b's positions by symbol so the work is O(n + m + d).
    std::unordered_map<Token, std::vector<int>> columns_of;
    for (int j = 1; j <= b.size(); ++j) columns_of[b.at1(j)].push_back(j);

    MatchSet out;
    for (int i = 1; i <= a.size(); ++i) {
        const Token symbol = a.at1(i);
        if (filter && symbol != *filter) continue;
        auto it = columns_of.find(symbol);
        if (it == columns_of.end()) continue;
        for (int j : it->second) out.matches.push_back({i, j});
    }
    out.d = static_cast<std::int64_t>(out.matches.size());
    if (filter) out.d_star = out.d;
    return out;
}

} // namespace striclcs
