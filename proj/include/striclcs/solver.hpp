// solver.hpp -- quadratic STR-IC-LCS: combine the forward/reverse LCS
// matrices with the compact-appearance tables, maximize
// F[i][j] + R[M_A[i]][M_B[j]] + r - 2 over matches on the constraint's first
// symbol, and reconstruct a witness by two-sided backtracking.
#pragma once

#include <optional>
#include <vector>

#include "striclcs/core.hpp"

namespace striclcs {

struct StrIcLcsResult {
    std::optional<int> length;        // absent when no solution exists
    std::optional<Match> anchor;      // first-symbol match realizing the optimum
    std::optional<Sequence> sequence; // witness, when reconstructed
    std::vector<Match> trace;         // witness coordinates, when reconstructed

    bool found() const { return length.has_value(); }
};

// Full solve with witness reconstruction. An empty constraint degenerates to
// the plain LCS of a and b (always solvable, possibly with an empty witness);
// for a non-empty constraint, "no solution" is reported when no anchor exists.
StrIcLcsResult solve(const Sequence& a, const Sequence& b, const Sequence& p);

// Same optimum using O(m + d*) working memory: both matrices are swept one
// row at a time and values are retained only at the match cells the
// combination formula can touch.
std::optional<int> solve_length_only(const Sequence& a, const Sequence& b, const Sequence& p);

// Witness reconstruction at a known anchor, for front ends (the sparse
// variant) that locate the optimum without keeping dense matrices. Throws
// std::invalid_argument when `anchor` is not a usable candidate.
StrIcLcsResult reconstruct_at(const Sequence& a, const Sequence& b, const Sequence& p,
                              Match anchor);

} // namespace striclcs
