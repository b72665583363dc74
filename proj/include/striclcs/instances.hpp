// instances.hpp -- seeded random instance generation shared by the benchmark
// harness and the test suites.
#pragma once

#include <random>

#include "striclcs/core.hpp"

namespace striclcs {

// Uniform random sequence over {base, ..., base + sigma - 1}.
inline Sequence random_sequence(std::mt19937_64& rng, int length, int sigma, Token base = 'a') {
    std::vector<Token> tokens(static_cast<std::size_t>(length));
    std::uniform_int_distribution<Token> pick(base, base + static_cast<Token>(sigma) - 1);
    for (Token& t : tokens) t = pick(rng);
    return Sequence(std::move(tokens));
}

} // namespace striclcs
