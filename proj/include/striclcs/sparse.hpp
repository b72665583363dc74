// sparse.hpp -- Hunt-Szymanski sweeps: LCS DP values at match points only.
//
// A row-major pass visits matches instead of cells, maintaining a threshold
// array T where T[k] is the smallest column that completes a common
// subsequence of length k for the rows swept so far. Each match costs one
// binary search, so the second stage runs in O(d log m) after O(n + m)
// bucketing (an ordered array stands in for the predecessor structures that
// would shave the log to log log).
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "striclcs/core.hpp"
#include "striclcs/dp.hpp"
#include "striclcs/solver.hpp"

namespace striclcs {

class ThresholdState {
public:
    // Rank of a match in the current sweep: one more than the number of
    // thresholds strictly below `column`. Replaces that rank's threshold by
    // `column` (appending when the rank is new) and returns the rank.
    int insert(int column);

    // Current number of ranks = LLCS of the swept prefix against the whole
    // other sequence.
    int size() const noexcept { return static_cast<int>(thresholds_.size()); }

    const std::vector<int>& thresholds() const noexcept { return thresholds_; }
    std::uint64_t operations() const noexcept { return ops_; }

private:
    std::vector<int> thresholds_; // strictly increasing
    std::uint64_t ops_ = 0;
};

struct SparseDpValues {
    Direction direction = Direction::forward;
    std::unordered_map<std::uint64_t, std::int32_t> at; // key(i, j) -> matrix value
    std::int64_t d = 0;              // matches swept
    std::int64_t d_star = 0;         // matches stored (symbol == keep)
    std::uint64_t structure_ops = 0; // threshold-structure operations

    static std::uint64_t key(int i, int j) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
               static_cast<std::uint32_t>(j);
    }
    std::optional<std::int32_t> value(Match m) const {
        auto it = at.find(key(m.i, m.j));
        if (it == at.end()) return std::nullopt;
        return it->second;
    }
};

// F[i][j] at every match with a_i == keep.
SparseDpValues sparse_forward(const Sequence& a, const Sequence& b, Token keep);

// R[i][j] at every match with a_i == keep; runs sparse_forward on the
// reversed sequences and remaps coordinates.
SparseDpValues sparse_reverse(const Sequence& a, const Sequence& b, Token keep);

// Length and anchor of an STR-IC-LCS evaluated from the two sparse value
// sets; witness reconstruction is delegated to solver::reconstruct_at since
// it needs the dense matrices anyway. Requires a non-empty constraint.
StrIcLcsResult solve_sparse(const Sequence& a, const Sequence& b, const Sequence& p);

} // namespace striclcs
