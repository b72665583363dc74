// dp.hpp -- dense forward and reverse LCS matrices with deterministic
// backtracking.
//
// Both directions share one (n+2) x (m+2) allocation so that F and R index
// identically: F uses borders at row/column 0, R at row n+1 / column m+1.
#pragma once

#include <cstdint>
#include <vector>

#include "striclcs/core.hpp"

namespace striclcs {

enum class Direction { forward, reverse };

class DpMatrix {
public:
    DpMatrix(Direction direction, int n, int m);

    Direction direction() const noexcept { return direction_; }
    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }

    // 0 <= i <= n+1, 0 <= j <= m+1.
    std::int32_t at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * (m_ + 2) + j];
    }

private:
    friend DpMatrix forward_matrix(const Sequence&, const Sequence&);
    friend DpMatrix reverse_matrix(const Sequence&, const Sequence&);

    std::int32_t* row(int i) { return cells_.data() + static_cast<std::size_t>(i) * (m_ + 2); }

    Direction direction_;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::int32_t> cells_;
};

// F[i][j] = LLCS(A[1..i], B[1..j]) for 0 <= i <= n, 0 <= j <= m.
DpMatrix forward_matrix(const Sequence& a, const Sequence& b);

// R[i][j] = LLCS(A[i..n], B[j..m]) for 1 <= i <= n+1, 1 <= j <= m+1.
DpMatrix reverse_matrix(const Sequence& a, const Sequence& b);

struct Backtrack {
    Sequence sequence;
    std::vector<Match> trace; // strictly increasing in both coordinates
};

// Walks F down from (i, j) collecting an optimal common subsequence of the
// prefixes. Tie-break: diagonal at matches, otherwise the vertical
// predecessor (i-1, j) when values tie.
Backtrack backtrack_prefix(const DpMatrix& f, const Sequence& a, const Sequence& b, int i, int j);

// Mirror image over R: collects an optimal common subsequence of the suffixes
// starting at (i, j).
Backtrack backtrack_suffix(const DpMatrix& r, const Sequence& a, const Sequence& b, int i, int j);

// As backtrack_prefix, but `from` must be a match; the result then has length
// F[i][j] and ends with the matched symbol. Throws std::invalid_argument on a
// non-match start.
Backtrack backtrack_forward(const DpMatrix& f, const Sequence& a, const Sequence& b, Match from);

// As backtrack_suffix with a match start; the result starts with the matched
// symbol and has length R[i][j].
Backtrack backtrack_reverse(const DpMatrix& r, const Sequence& a, const Sequence& b, Match from);

} // namespace striclcs
