// core.hpp -- sequence and match primitives shared by every module.
//
// All public position arithmetic in this library is 1-based: a sequence of
// length n has symbols at positions 1..n, and a match (i, j) refers to
// a_i = b_j. DP matrices carry sentinel borders at 0 and n+1 / m+1.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace striclcs {

// Opaque symbol id. Callers with richer symbol types are expected to intern
// them into dense ids first; the CLI maps raw bytes 1:1.
using Token = std::uint32_t;

class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    static Sequence from_bytes(std::string_view bytes);

    int size() const noexcept { return static_cast<int>(tokens_.size()); }
    bool empty() const noexcept { return tokens_.empty(); }

    // 1-based access.
    Token at1(int pos) const { return tokens_[static_cast<std::size_t>(pos) - 1]; }

    std::span<const Token> tokens() const noexcept { return tokens_; }

    // Inclusive 1-based slice [lo..hi]; empty when lo > hi.
    Sequence slice1(int lo, int hi) const;
    Sequence reversed() const;

    // Renders single-byte tokens back to a string; throws for tokens >= 256.
    std::string to_bytes() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Token> tokens_;
};

// A pair (i, j), 1-based, with a_i = b_j.
struct Match {
    int i = 0;
    int j = 0;
    friend bool operator==(const Match&, const Match&) = default;
    friend auto operator<=>(const Match&, const Match&) = default; // row-major order
};

struct MatchSet {
    std::vector<Match> matches;  // strictly increasing row-major, no duplicates
    std::int64_t d = 0;          // |matches|
    std::int64_t d_star = 0;     // matches whose symbol equals the filter token (0 if unfiltered)
};

// True iff x can be obtained from y by deleting zero or more symbols.
bool is_subsequence(const Sequence& x, const Sequence& y);

// True iff x occurs contiguously in y.
bool is_substring(const Sequence& x, const Sequence& y);

// All matches (i, j) with a_i = b_j, restricted to a_i = filter when given.
MatchSet enumerate_matches(const Sequence& a, const Sequence& b,
                           std::optional<Token> filter = std::nullopt);

} // namespace striclcs
