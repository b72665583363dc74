#include "striclcs/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace striclcs {

CompactAppearanceTable build_table(const Sequence& s, const Sequence& p) {
    if (p.empty()) throw std::invalid_argument("build_table: empty constraint");

    CompactAppearanceTable table;
    table.end_.assign(static_cast<std::size_t>(s.size()), std::nullopt);

    const Token first = p.at1(1);
    const int n = s.size();
    const int r = p.size();
    for (int i = 1; i <= n; ++i) {
        if (s.at1(i) != first) continue;
        ++table.stats_.starts;
        // Greedy left-to-right embedding of p starting at i; the earliest
        // completion is exactly the compact appearance.
        int matched = 0;
        int q = i;
        std::int64_t steps = 0;
        for (; q <= n; ++q) {
            ++steps;
            if (s.at1(q) == p.at1(matched + 1) && ++matched == r) break;
        }
        table.stats_.scan_steps += steps;
        table.stats_.max_scan_steps = std::max(table.stats_.max_scan_steps, steps);
        if (matched == r) {
            table.end_[static_cast<std::size_t>(i) - 1] = q;
            ++table.count_;
        }
    }
    return table;
}

int count_compact_appearances(const CompactAppearanceTable& table) {
    return table.count();
}

std::vector<int> compact_appearance_indices(const Sequence& s, const Sequence& p, int start) {
    std::vector<int> indices;
    if (p.empty() || start < 1 || start > s.size() || s.at1(start) != p.at1(1)) return indices;
    indices.reserve(static_cast<std::size_t>(p.size()));
    int matched = 0;
    for (int q = start; q <= s.size(); ++q) {
        if (s.at1(q) == p.at1(matched + 1)) {
            indices.push_back(q);
            if (++matched == p.size()) return indices;
        }
    }
    indices.clear(); // no full appearance
    return indices;
}

} // namespace striclcs
