#include "striclcs/solver.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "striclcs/dp.hpp"
#include "striclcs/preprocess.hpp"

namespace striclcs {

namespace {

StrIcLcsResult plain_lcs(const Sequence& a, const Sequence& b) {
    DpMatrix f = forward_matrix(a, b);
    Backtrack bt = backtrack_prefix(f, a, b, a.size(), b.size());
    StrIcLcsResult out;
    out.length = f.at(a.size(), b.size());
    out.sequence = std::move(bt.sequence);
    out.trace = std::move(bt.trace);
    return out;
}

// Stitches S1 . p_2..p_r . tail(S2). S2 starts with p_r at the compact
// appearance ends, so dropping its head makes the rule uniform in r: the
// total is F + (r-1) + (R-1) = F + R + r - 2 and the anchor symbol is never
// counted twice (for r = 1 the middle segment is empty).
StrIcLcsResult assemble(const Sequence& a, const Sequence& b, const Sequence& p,
                        const DpMatrix& f, const DpMatrix& r,
                        const CompactAppearanceTable& table_a,
                        const CompactAppearanceTable& table_b,
                        Match anchor, int length) {
    Backtrack s1 = backtrack_forward(f, a, b, anchor);
    const Match tail_from{*table_a.end_index(anchor.i), *table_b.end_index(anchor.j)};
    Backtrack s2 = backtrack_reverse(r, a, b, tail_from);

    const std::vector<int> in_a = compact_appearance_indices(a, p, anchor.i);
    const std::vector<int> in_b = compact_appearance_indices(b, p, anchor.j);

    std::vector<Token> tokens(s1.sequence.tokens().begin(), s1.sequence.tokens().end());
    std::vector<Match> trace = std::move(s1.trace);
    for (int t = 2; t <= p.size(); ++t) {
        tokens.push_back(p.at1(t));
        trace.push_back({in_a[static_cast<std::size_t>(t) - 1], in_b[static_cast<std::size_t>(t) - 1]});
    }
    auto s2_tokens = s2.sequence.tokens();
    tokens.insert(tokens.end(), s2_tokens.begin() + 1, s2_tokens.end());
    trace.insert(trace.end(), s2.trace.begin() + 1, s2.trace.end());

    assert(static_cast<int>(tokens.size()) == length);

    StrIcLcsResult out;
    out.length = length;
    out.anchor = anchor;
    out.sequence = Sequence(std::move(tokens));
    out.trace = std::move(trace);
    return out;
}

} // namespace

StrIcLcsResult solve(const Sequence& a, const Sequence& b, const Sequence& p) {
    if (p.empty()) return plain_lcs(a, b);

    const CompactAppearanceTable table_a = build_table(a, p);
    const CompactAppearanceTable table_b = build_table(b, p);
    const DpMatrix f = forward_matrix(a, b);
    const DpMatrix r = reverse_matrix(a, b);

    const Token first = p.at1(1);
    const int n = a.size();
    const int m = b.size();
    int best = -1;
    Match anchor{};
    bool found = false;
    // Row-major scan with a strict ">" update keeps the first maximum.
    for (int i = 1; i <= n; ++i) {
        if (a.at1(i) != first || !table_a.defined(i)) continue;
        const int end_a = *table_a.end_index(i);
        for (int j = 1; j <= m; ++j) {
            if (b.at1(j) != first || !table_b.defined(j)) continue;
            const int candidate = f.at(i, j) + r.at(end_a, *table_b.end_index(j)) + p.size() - 2;
            if (candidate > best) {
                best = candidate;
                anchor = {i, j};
                found = true;
            }
        }
    }
    if (!found) return {};
    return assemble(a, b, p, f, r, table_a, table_b, anchor, best);
}

StrIcLcsResult reconstruct_at(const Sequence& a, const Sequence& b, const Sequence& p,
                              Match anchor) {
    if (p.empty()) throw std::invalid_argument("reconstruct_at: empty constraint has no anchor");
    if (anchor.i < 1 || anchor.i > a.size() || anchor.j < 1 || anchor.j > b.size() ||
        a.at1(anchor.i) != p.at1(1) || b.at1(anchor.j) != p.at1(1)) {
        throw std::invalid_argument("reconstruct_at: anchor is not a first-symbol match");
    }
    const CompactAppearanceTable table_a = build_table(a, p);
    const CompactAppearanceTable table_b = build_table(b, p);
    if (!table_a.defined(anchor.i) || !table_b.defined(anchor.j)) {
        throw std::invalid_argument("reconstruct_at: no compact appearance at the anchor");
    }
    const DpMatrix f = forward_matrix(a, b);
    const DpMatrix r = reverse_matrix(a, b);
    const int length = f.at(anchor.i, anchor.j) +
                       r.at(*table_a.end_index(anchor.i), *table_b.end_index(anchor.j)) +
                       p.size() - 2;
    return assemble(a, b, p, f, r, table_a, table_b, anchor, length);
}

namespace {

std::uint64_t cell_key(int i, int j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
}

// One-row LLCS sweep used by the empty-constraint case.
int llcs_row_by_row(const Sequence& a, const Sequence& b) {
    const int m = b.size();
    std::vector<std::int32_t> prev(static_cast<std::size_t>(m) + 1, 0);
    std::vector<std::int32_t> cur(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 1; i <= a.size(); ++i) {
        const Token ai = a.at1(i);
        for (int j = 1; j <= m; ++j) {
            cur[j] = (ai == b.at1(j)) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

} // namespace

std::optional<int> solve_length_only(const Sequence& a, const Sequence& b, const Sequence& p) {
    if (p.empty()) return llcs_row_by_row(a, b);

    const CompactAppearanceTable table_a = build_table(a, p);
    const CompactAppearanceTable table_b = build_table(b, p);
    const int n = a.size();
    const int m = b.size();
    const Token first = p.at1(1);
    const Token last = p.at1(p.size());

    // Compact-appearance end positions; R values are kept only there.
    std::vector<char> end_in_a(static_cast<std::size_t>(n) + 2, 0);
    std::vector<char> end_in_b(static_cast<std::size_t>(m) + 2, 0);
    for (int i = 1; i <= n; ++i)
        if (table_a.defined(i)) end_in_a[static_cast<std::size_t>(*table_a.end_index(i))] = 1;
    for (int j = 1; j <= m; ++j)
        if (table_b.defined(j)) end_in_b[static_cast<std::size_t>(*table_b.end_index(j))] = 1;

    std::vector<std::int32_t> prev(static_cast<std::size_t>(m) + 2, 0);
    std::vector<std::int32_t> cur(static_cast<std::size_t>(m) + 2, 0);

    // Forward sweep: retain F only at matches on p_1.
    std::unordered_map<std::uint64_t, std::int32_t> f_at;
    for (int i = 1; i <= n; ++i) {
        const Token ai = a.at1(i);
        cur[0] = 0;
        for (int j = 1; j <= m; ++j) {
            cur[j] = (ai == b.at1(j)) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
            if (ai == first && ai == b.at1(j)) f_at.emplace(cell_key(i, j), cur[j]);
        }
        std::swap(prev, cur);
    }

    // Reverse sweep: retain R only at matches on p_r that end a compact
    // appearance in both sequences.
    std::unordered_map<std::uint64_t, std::int32_t> r_at;
    std::fill(prev.begin(), prev.end(), 0);
    std::fill(cur.begin(), cur.end(), 0);
    for (int i = n; i >= 1; --i) {
        const Token ai = a.at1(i);
        cur[static_cast<std::size_t>(m) + 1] = 0;
        for (int j = m; j >= 1; --j) {
            cur[j] = (ai == b.at1(j)) ? prev[j + 1] + 1 : std::max(prev[j], cur[j + 1]);
            if (ai == last && ai == b.at1(j) && end_in_a[static_cast<std::size_t>(i)] &&
                end_in_b[static_cast<std::size_t>(j)]) {
                r_at.emplace(cell_key(i, j), cur[j]);
            }
        }
        std::swap(prev, cur);
    }

    std::optional<int> best;
    for (const auto& [key, f_value] : f_at) {
        const int i = static_cast<int>(key >> 32);
        const int j = static_cast<int>(key & 0xffffffffu);
        if (!table_a.defined(i) || !table_b.defined(j)) continue;
        const auto r_it = r_at.find(cell_key(*table_a.end_index(i), *table_b.end_index(j)));
        assert(r_it != r_at.end());
        const int candidate = f_value + r_it->second + p.size() - 2;
        if (!best || candidate > *best) best = candidate;
    }
    return best;
}

} // namespace striclcs
