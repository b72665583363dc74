#include "striclcs/dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace striclcs {

DpMatrix::DpMatrix(Direction direction, int n, int m)
    : direction_(direction),
      n_(n),
      m_(m),
      cells_(static_cast<std::size_t>(n + 2) * (m + 2), 0) {}

DpMatrix forward_matrix(const Sequence& a, const Sequence& b) {
    const int n = a.size();
    const int m = b.size();
    DpMatrix f(Direction::forward, n, m);
    const auto bt = b.tokens();
    for (int i = 1; i <= n; ++i) {
        const Token ai = a.at1(i);
        std::int32_t* cur = f.row(i);
        const std::int32_t* prev = cur - (m + 2);
        for (int j = 1; j <= m; ++j) {
            // Branchless equivalent of the match/mismatch cases: at a match
            // the diagonal + 1 dominates, otherwise the diagonal cannot win.
            const std::int32_t diag = prev[j - 1] + static_cast<std::int32_t>(ai == bt[j - 1]);
            cur[j] = std::max(std::max(prev[j], cur[j - 1]), diag);
        }
    }
    return f;
}

DpMatrix reverse_matrix(const Sequence& a, const Sequence& b) {
    const int n = a.size();
    const int m = b.size();
    DpMatrix r(Direction::reverse, n, m);
    const auto bt = b.tokens();
    for (int i = n; i >= 1; --i) {
        const Token ai = a.at1(i);
        std::int32_t* cur = r.row(i);
        const std::int32_t* next = cur + (m + 2);
        for (int j = m; j >= 1; --j) {
            const std::int32_t diag = next[j + 1] + static_cast<std::int32_t>(ai == bt[j - 1]);
            cur[j] = std::max(std::max(next[j], cur[j + 1]), diag);
        }
    }
    return r;
}

Backtrack backtrack_prefix(const DpMatrix& f, const Sequence& a, const Sequence& b, int i, int j) {
    Backtrack out;
    out.trace.reserve(static_cast<std::size_t>(f.at(i, j)));
    while (i >= 1 && j >= 1 && f.at(i, j) > 0) {
        if (a.at1(i) == b.at1(j)) {
            out.trace.push_back({i, j});
            --i;
            --j;
        } else if (f.at(i - 1, j) >= f.at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(out.trace.begin(), out.trace.end());
    std::vector<Token> tokens;
    tokens.reserve(out.trace.size());
    for (const Match& step : out.trace) tokens.push_back(a.at1(step.i));
    out.sequence = Sequence(std::move(tokens));
    return out;
}

Backtrack backtrack_suffix(const DpMatrix& r, const Sequence& a, const Sequence& b, int i, int j) {
    Backtrack out;
    out.trace.reserve(static_cast<std::size_t>(r.at(i, j)));
    const int n = r.n();
    const int m = r.m();
    while (i <= n && j <= m && r.at(i, j) > 0) {
        if (a.at1(i) == b.at1(j)) {
            out.trace.push_back({i, j});
            ++i;
            ++j;
        } else if (r.at(i + 1, j) >= r.at(i, j + 1)) {
            ++i;
        } else {
            ++j;
        }
    }
    std::vector<Token> tokens;
    tokens.reserve(out.trace.size());
    for (const Match& step : out.trace) tokens.push_back(a.at1(step.i));
    out.sequence = Sequence(std::move(tokens));
    return out;
}

namespace {

void require_match(const Sequence& a, const Sequence& b, Match from, const char* who) {
    if (from.i < 1 || from.i > a.size() || from.j < 1 || from.j > b.size() ||
        a.at1(from.i) != b.at1(from.j)) {
        throw std::invalid_argument(std::string(who) + ": start coordinates are not a match");
    }
}

} // namespace

Backtrack backtrack_forward(const DpMatrix& f, const Sequence& a, const Sequence& b, Match from) {
    require_match(a, b, from, "backtrack_forward");
    return backtrack_prefix(f, a, b, from.i, from.j);
}

Backtrack backtrack_reverse(const DpMatrix& r, const Sequence& a, const Sequence& b, Match from) {
    require_match(a, b, from, "backtrack_reverse");
    return backtrack_suffix(r, a, b, from.i, from.j);
}

} // namespace striclcs
