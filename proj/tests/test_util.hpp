// Shared helpers for the test suites: tiny constructors and brute-force
// oracles kept independent of the library's solver paths (subset enumeration
// only, no DP).
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "striclcs/core.hpp"

namespace testutil {

inline striclcs::Sequence seq(std::string_view text) {
    return striclcs::Sequence::from_bytes(text);
}

// Subsequence test by exhaustive positional subsets of y (|y| <= ~20).
inline bool subsequence_by_enumeration(const striclcs::Sequence& x, const striclcs::Sequence& y) {
    const auto xs = x.tokens();
    const auto ys = y.tokens();
    if (xs.size() > ys.size()) return false;
    for (std::uint32_t mask = 0; mask < (1u << ys.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != xs.size()) continue;
        std::size_t t = 0;
        bool equal = true;
        for (std::size_t pos = 0; pos < ys.size(); ++pos) {
            if (!(mask & (1u << pos))) continue;
            if (ys[pos] != xs[t++]) {
                equal = false;
                break;
            }
        }
        if (equal) return true;
    }
    return false;
}

// Substring test by scanning every offset.
inline bool substring_by_scan(const striclcs::Sequence& x, const striclcs::Sequence& y) {
    if (x.size() > y.size()) return false;
    for (int off = 1; off + x.size() - 1 <= y.size(); ++off) {
        bool equal = true;
        for (int t = 1; t <= x.size(); ++t) {
            if (y.at1(off + t - 1) != x.at1(t)) {
                equal = false;
                break;
            }
        }
        if (equal) return true;
    }
    return false;
}

// LCS length of z >= 1 sequences by enumerating subsequences of the first.
// The first sequence must be short (<= ~20 tokens).
inline int llcs_by_enumeration(const std::vector<striclcs::Sequence>& seqs) {
    const auto pool = seqs.front().tokens();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        if (std::popcount(mask) <= best) continue;
        std::vector<striclcs::Token> tokens;
        for (std::size_t t = 0; t < pool.size(); ++t) {
            if (mask & (1u << t)) tokens.push_back(pool[t]);
        }
        striclcs::Sequence candidate{std::move(tokens)};
        bool common = true;
        for (std::size_t k = 1; k < seqs.size() && common; ++k) {
            common = striclcs::is_subsequence(candidate, seqs[k]);
        }
        if (common) best = static_cast<int>(candidate.size());
    }
    return best;
}

inline int llcs_by_enumeration(const striclcs::Sequence& a, const striclcs::Sequence& b) {
    return llcs_by_enumeration(std::vector<striclcs::Sequence>{a, b});
}

// Brute-force STR-IC-LCS over any number of mains: longest subsequence of
// every main that contains p contiguously, or nullopt.
inline std::optional<int> str_ic_lcs_by_enumeration(const std::vector<striclcs::Sequence>& mains,
                                                    const striclcs::Sequence& p) {
    const auto pool = mains.front().tokens();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        if (std::popcount(mask) <= best) continue;
        std::vector<striclcs::Token> tokens;
        for (std::size_t t = 0; t < pool.size(); ++t) {
            if (mask & (1u << t)) tokens.push_back(pool[t]);
        }
        striclcs::Sequence candidate{std::move(tokens)};
        if (!striclcs::is_substring(p, candidate)) continue;
        bool common = true;
        for (std::size_t k = 1; k < mains.size() && common; ++k) {
            common = striclcs::is_subsequence(candidate, mains[k]);
        }
        if (common) best = candidate.size();
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace detail {
inline void collect_appearance_ends(const striclcs::Sequence& s, const striclcs::Sequence& p,
                                    int next, int matched, std::vector<int>& ends) {
    for (int q = next; q <= s.size(); ++q) {
        if (s.at1(q) != p.at1(matched + 1)) continue;
        if (matched + 1 == p.size()) {
            ends.push_back(q);
        } else {
            collect_appearance_ends(s, p, q + 1, matched + 1, ends);
        }
    }
}
} // namespace detail

// Last indexes of ALL appearances of p in s that start at `start`.
inline std::vector<int> appearance_ends(const striclcs::Sequence& s, const striclcs::Sequence& p,
                                        int start) {
    std::vector<int> ends;
    if (p.empty() || start < 1 || start > s.size() || s.at1(start) != p.at1(1)) return ends;
    if (p.size() == 1) {
        ends.push_back(start);
        return ends;
    }
    detail::collect_appearance_ends(s, p, start + 1, 1, ends);
    return ends;
}

// Sequences of every length in [0, max_len] over tokens 'a'..'a'+sigma-1,
// lexicographic within a length.
inline std::vector<striclcs::Sequence> all_sequences(int max_len, int sigma) {
    std::vector<striclcs::Sequence> out;
    for (int len = 0; len <= max_len; ++len) {
        std::vector<striclcs::Token> cur(static_cast<std::size_t>(len), 'a');
        for (;;) {
            out.emplace_back(cur);
            int pos = len - 1;
            while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == 'a' + static_cast<unsigned>(sigma) - 1) {
                cur[static_cast<std::size_t>(pos)] = 'a';
                --pos;
            }
            if (pos < 0) break;
            ++cur[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

} // namespace testutil
