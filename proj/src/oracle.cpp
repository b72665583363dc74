#include "striclcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace striclcs {

namespace {

bool span_is_subsequence(std::span<const Token> x, std::span<const Token> y) {
    std::size_t next = 0;
    for (Token t : y) {
        if (next < x.size() && x[next] == t) ++next;
    }
    return next == x.size();
}

bool span_is_substring(std::span<const Token> x, std::span<const Token> y) {
    if (x.empty()) return true;
    return std::search(y.begin(), y.end(), x.begin(), x.end()) != y.end();
}

} // namespace

std::optional<int> exhaustive_str_ic_lcs(const Sequence& a, const Sequence& b, const Sequence& p) {
    if (a.size() > kExhaustiveLimit || b.size() > kExhaustiveLimit) {
        throw std::invalid_argument("exhaustive_str_ic_lcs: inputs exceed the enumeration guard");
    }
    const Sequence& shorter = a.size() <= b.size() ? a : b;
    const Sequence& longer = a.size() <= b.size() ? b : a;
    const auto pool = shorter.tokens();
    const int k = shorter.size();

    int best = -1;
    std::vector<Token> candidate;
    candidate.reserve(static_cast<std::size_t>(k));
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (std::popcount(mask) <= best) continue;
        candidate.clear();
        for (int t = 0; t < k; ++t) {
            if (mask & (1u << t)) candidate.push_back(pool[static_cast<std::size_t>(t)]);
        }
        if (!span_is_subsequence(candidate, longer.tokens())) continue;
        if (!span_is_substring(p.tokens(), candidate)) continue;
        best = static_cast<int>(candidate.size());
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> cubic_str_ic_lcs(const Sequence& a, const Sequence& b, const Sequence& p) {
    if (p.empty()) throw std::invalid_argument("cubic_str_ic_lcs: constraint must be non-empty");
    const int n = a.size();
    const int m = b.size();
    const int r = p.size();
    constexpr std::int32_t kUnreachable = INT32_MIN / 4;

    // Rolling planes over i: in[k][j] is the best length of a common
    // subsequence of A[1..i], B[1..j] ending with p_1..p_k as a suffix
    // (k = 0: any common subsequence); done[j] is the best length with the
    // whole constraint already embedded.
    const std::size_t width = static_cast<std::size_t>(m) + 1;
    std::vector<std::int32_t> in_prev(static_cast<std::size_t>(r + 1) * width, kUnreachable);
    std::vector<std::int32_t> in_cur(static_cast<std::size_t>(r + 1) * width, kUnreachable);
    std::vector<std::int32_t> done_prev(width, kUnreachable);
    std::vector<std::int32_t> done_cur(width, kUnreachable);

    for (std::size_t j = 0; j < width; ++j) in_prev[j] = 0; // k = 0 over empty A-prefix

    for (int i = 1; i <= n; ++i) {
        const Token ai = a.at1(i);
        in_cur[0] = 0;
        for (int j = 1; j <= m; ++j) {
            in_cur[static_cast<std::size_t>(j)] =
                (ai == b.at1(j))
                    ? in_prev[static_cast<std::size_t>(j) - 1] + 1
                    : std::max(in_prev[static_cast<std::size_t>(j)],
                               in_cur[static_cast<std::size_t>(j) - 1]);
        }
        for (int k = 1; k <= r; ++k) {
            std::int32_t* cur = in_cur.data() + static_cast<std::size_t>(k) * width;
            const std::int32_t* up = in_prev.data() + static_cast<std::size_t>(k) * width;
            const std::int32_t* diag = in_prev.data() + static_cast<std::size_t>(k - 1) * width;
            cur[0] = kUnreachable;
            const Token pk = p.at1(k);
            for (int j = 1; j <= m; ++j) {
                std::int32_t best = std::max(up[j], cur[j - 1]);
                if (ai == pk && ai == b.at1(j)) best = std::max(best, diag[j - 1] + 1);
                cur[j] = best;
            }
        }
        const std::int32_t* full = in_cur.data() + static_cast<std::size_t>(r) * width;
        done_cur[0] = kUnreachable;
        for (int j = 1; j <= m; ++j) {
            std::int32_t best = std::max(done_prev[static_cast<std::size_t>(j)],
                                         done_cur[static_cast<std::size_t>(j) - 1]);
            if (ai == b.at1(j)) best = std::max(best, done_prev[static_cast<std::size_t>(j) - 1] + 1);
            best = std::max(best, full[j]);
            done_cur[static_cast<std::size_t>(j)] = best;
        }
        std::swap(in_prev, in_cur);
        std::swap(done_prev, done_cur);
    }

    // A valid result embeds all r constraint symbols, so anything below r is
    // an unreachable-state artifact.
    const std::int32_t result = done_prev[static_cast<std::size_t>(m)];
    if (result < r) return std::nullopt;
    return result;
}

} // namespace striclcs
