// preprocess.hpp -- compact-appearance tables.
//
// For each position i of a main sequence where the constraint's first symbol
// occurs, the table holds the smallest index q such that the whole constraint
// is a subsequence of the slice [i..q]. Positions where the constraint cannot
// complete stay undefined.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "striclcs/core.hpp"

namespace striclcs {

class CompactAppearanceTable {
public:
    struct BuildStats {
        std::int64_t starts = 0;          // occurrences of p_1 scanned
        std::int64_t scan_steps = 0;      // total positions visited across scans
        std::int64_t max_scan_steps = 0;  // worst single scan
    };

    CompactAppearanceTable() = default;

    int sequence_size() const noexcept { return static_cast<int>(end_.size()); }

    // 1-based; defined only where p_1 occurs and a full appearance completes.
    bool defined(int pos) const { return end_[static_cast<std::size_t>(pos) - 1].has_value(); }
    std::optional<int> end_index(int pos) const { return end_[static_cast<std::size_t>(pos) - 1]; }

    // Number of defined entries (d^A / d^B).
    int count() const noexcept { return count_; }

    const BuildStats& stats() const noexcept { return stats_; }

private:
    friend CompactAppearanceTable build_table(const Sequence&, const Sequence&);

    std::vector<std::optional<int>> end_;
    BuildStats stats_;
    int count_ = 0;
};

// Builds the table for constraint p over s by one greedy forward scan per p_1
// occurrence. Throws std::invalid_argument when p is empty; the solver layer
// owns the empty-constraint degenerate case.
CompactAppearanceTable build_table(const Sequence& s, const Sequence& p);

int count_compact_appearances(const CompactAppearanceTable& table);

// The full index list i_1 < ... < i_r of the compact appearance of p in s
// starting at `start`, or an empty vector when none completes. Used by the
// solver to stitch the middle segment of a witness.
std::vector<int> compact_appearance_indices(const Sequence& s, const Sequence& p, int start);

} // namespace striclcs
