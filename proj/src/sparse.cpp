#include "striclcs/sparse.hpp"

#include <algorithm>
#include <stdexcept>

#include "striclcs/preprocess.hpp"

namespace striclcs {

int ThresholdState::insert(int column) {
    ++ops_;
    auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), column);
    const int rank = static_cast<int>(it - thresholds_.begin()) + 1;
    if (it == thresholds_.end()) {
        thresholds_.push_back(column);
    } else {
        *it = column;
    }
    return rank;
}

SparseDpValues sparse_forward(const Sequence& a, const Sequence& b, Token keep) {
    // Bucket b's columns per symbol (token interning is the caller's job for
    // alphabets that are not already dense ids).
    std::unordered_map<Token, std::vector<int>> columns_of;
    for (int j = 1; j <= b.size(); ++j) columns_of[b.at1(j)].push_back(j);

    SparseDpValues out;
    out.direction = Direction::forward;
    ThresholdState state;
    for (int i = 1; i <= a.size(); ++i) {
        const auto it = columns_of.find(a.at1(i));
        if (it == columns_of.end()) continue;
        const bool store = (a.at1(i) == keep);
        // Descending column order so same-row updates cannot disturb the
        // lookups of the smaller columns still pending in this row.
        const std::vector<int>& cols = it->second;
        for (auto rit = cols.rbegin(); rit != cols.rend(); ++rit) {
            const int rank = state.insert(*rit);
            ++out.d;
            if (store) {
                out.at.emplace(SparseDpValues::key(i, *rit), rank);
                ++out.d_star;
            }
        }
    }
    out.structure_ops = state.operations();
    return out;
}

SparseDpValues sparse_reverse(const Sequence& a, const Sequence& b, Token keep) {
    const SparseDpValues mirrored = sparse_forward(a.reversed(), b.reversed(), keep);
    SparseDpValues out;
    out.direction = Direction::reverse;
    out.d = mirrored.d;
    out.d_star = mirrored.d_star;
    out.structure_ops = mirrored.structure_ops;
    out.at.reserve(mirrored.at.size());
    const int n = a.size();
    const int m = b.size();
    for (const auto& [key, value] : mirrored.at) {
        const int i = n + 1 - static_cast<int>(key >> 32);
        const int j = m + 1 - static_cast<int>(key & 0xffffffffu);
        out.at.emplace(SparseDpValues::key(i, j), value);
    }
    return out;
}

StrIcLcsResult solve_sparse(const Sequence& a, const Sequence& b, const Sequence& p) {
    if (p.empty()) throw std::invalid_argument("solve_sparse: constraint must be non-empty");

    const CompactAppearanceTable table_a = build_table(a, p);
    const CompactAppearanceTable table_b = build_table(b, p);
    const Token first = p.at1(1);
    const Token last = p.at1(p.size());

    const SparseDpValues f_values = sparse_forward(a, b, first);
    const SparseDpValues r_values = sparse_reverse(a, b, last);

    int best = -1;
    Match anchor{};
    bool found = false;
    const MatchSet candidates = enumerate_matches(a, b, first); // row-major
    for (const Match& m : candidates.matches) {
        if (!table_a.defined(m.i) || !table_b.defined(m.j)) continue;
        const auto f_it = f_values.at.find(SparseDpValues::key(m.i, m.j));
        const auto r_it =
            r_values.at.find(SparseDpValues::key(*table_a.end_index(m.i), *table_b.end_index(m.j)));
        const int candidate = f_it->second + r_it->second + p.size() - 2;
        if (candidate > best) {
            best = candidate;
            anchor = m;
            found = true;
        }
    }
    if (!found) return {};

    StrIcLcsResult out;
    out.length = best;
    out.anchor = anchor;
    return out;
}

} // namespace striclcs
