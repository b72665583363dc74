// bench.hpp -- benchmark harness: seeded random instances over a size grid,
// per-algorithm wall times, cross-checking of every result, and log-log
// growth-exponent fits.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "striclcs/core.hpp"

namespace striclcs {

struct BenchSpec {
    std::vector<int> sizes; // n = m per grid point
    int constraint_len = 20;
    int sigma = 4;
    int reps = 5;
    std::vector<std::string> algorithms{"quadratic", "cubic"}; // also: "sparse"
    std::uint64_t seed = 0x5eed;
};

struct BenchMismatch {
    Sequence a, b, p; // minimized reproduction instance
    std::map<std::string, std::optional<int>> lengths;
};

struct BenchSizeResult {
    int n = 0;
    std::map<std::string, std::vector<std::int64_t>> times_ns; // per algorithm, per rep
    std::map<std::string, std::int64_t> median_ns;
    std::vector<std::optional<int>> lengths; // agreed optimum per rep
};

struct BenchReport {
    BenchSpec spec;
    std::vector<BenchSizeResult> per_size;
    std::map<std::string, double> fitted_exponent; // needs >= 2 grid sizes
    bool agreement = true;
    std::optional<BenchMismatch> mismatch;
};

// Validates the configuration (non-empty positive grid, known algorithms,
// sigma in 1..256, non-empty constraint when cubic or sparse run) and throws
// std::invalid_argument on violations. On an algorithm disagreement the
// report carries agreement = false plus a minimized reproduction; timing
// entries collected so far are preserved.
BenchReport run_bench(const BenchSpec& spec);

// Least-squares slope of log(time) against log(size).
double fit_log_log_exponent(const std::vector<int>& sizes,
                            const std::vector<std::int64_t>& times_ns);

} // namespace striclcs
