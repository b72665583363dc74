// oracle.hpp -- independent reference solvers used for testing and as the
// benchmark baseline. Both compute lengths only and share nothing with the
// quadratic path beyond the core types.
#pragma once

#include <optional>

#include "striclcs/core.hpp"

namespace striclcs {

inline constexpr int kExhaustiveLimit = 16;

// Brute force: enumerates every subsequence of the shorter input (2^min(n,m)
// candidates) and keeps the longest that is a subsequence of the other input
// and contains p contiguously. Throws std::invalid_argument beyond the
// enumeration guard.
std::optional<int> exhaustive_str_ic_lcs(const Sequence& a, const Sequence& b, const Sequence& p);

// O(nmr) baseline: a DP over prefix pairs and constraint progress. State
// k in 0..r tracks common subsequences ending with p_1..p_k as a contiguous
// suffix (k = 0 is the unconstrained phase), and a final phase extends
// freely once the whole constraint has been laid down. Requires a non-empty
// constraint.
std::optional<int> cubic_str_ic_lcs(const Sequence& a, const Sequence& b, const Sequence& p);

} // namespace striclcs
