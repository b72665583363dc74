#include "striclcs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "striclcs/instances.hpp"
#include "striclcs/oracle.hpp"
#include "striclcs/solver.hpp"
#include "striclcs/sparse.hpp"

namespace striclcs {

namespace {

using Clock = std::chrono::steady_clock;

// Timing hygiene: keep freed blocks on the heap instead of handing them back
// to the kernel, so a timed run does not pay page-fault costs that depend on
// whatever this process allocated earlier.
void stabilize_allocator() {
#if defined(__GLIBC__)
    static const bool done = [] {
        mallopt(M_MMAP_MAX, 0);
        mallopt(M_TRIM_THRESHOLD, -1);
        return true;
    }();
    (void)done;
#endif
}

std::optional<int> run_algorithm(const std::string& name, const Sequence& a, const Sequence& b,
                                 const Sequence& p) {
    if (name == "quadratic") return solve(a, b, p).length;
    if (name == "cubic") return cubic_str_ic_lcs(a, b, p);
    if (name == "sparse") return solve_sparse(a, b, p).length;
    throw std::invalid_argument("bench: unknown algorithm: " + name);
}

std::int64_t median(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

bool lengths_disagree(const std::map<std::string, std::optional<int>>& lengths) {
    auto first = lengths.begin();
    for (auto it = std::next(first); it != lengths.end(); ++it) {
        if (it->second != first->second) return true;
    }
    return false;
}

std::map<std::string, std::optional<int>> evaluate_all(const std::vector<std::string>& algorithms,
                                                       const Sequence& a, const Sequence& b,
                                                       const Sequence& p) {
    std::map<std::string, std::optional<int>> lengths;
    for (const std::string& name : algorithms) lengths[name] = run_algorithm(name, a, b, p);
    return lengths;
}

// Greedy shrink of a disagreeing instance: halve aggressively while large,
// then drop single tokens until a local minimum. Only runs on the failure
// path, so thoroughness beats speed, but the work is still capped.
BenchMismatch minimize(const std::vector<std::string>& algorithms, Sequence a, Sequence b,
                       Sequence p) {
    auto still_bad = [&](const Sequence& xa, const Sequence& xb, const Sequence& xp) {
        return lengths_disagree(evaluate_all(algorithms, xa, xb, xp));
    };

    int budget = 2000; // solver invocations
    bool changed = true;
    while (changed && budget > 0) {
        changed = false;
        for (Sequence* seq : {&a, &b, &p}) {
            if (seq == &p && p.size() <= 1) continue; // keep the constraint non-empty
            // Halving pass.
            while (seq->size() > 64 && budget > 0) {
                const int half = seq->size() / 2;
                Sequence head = seq->slice1(1, half);
                Sequence tail = seq->slice1(half + 1, seq->size());
                Sequence* kept = nullptr;
                --budget;
                if (seq == &a ? still_bad(head, b, p)
                              : (seq == &b ? still_bad(a, head, p) : still_bad(a, b, head))) {
                    kept = &head;
                } else {
                    --budget;
                    if (seq == &a ? still_bad(tail, b, p)
                                  : (seq == &b ? still_bad(a, tail, p) : still_bad(a, b, tail))) {
                        kept = &tail;
                    }
                }
                if (!kept) break;
                *seq = *kept;
                changed = true;
            }
            // Token-removal pass on small sequences.
            if (seq->size() <= 128) {
                for (int pos = seq->size(); pos >= 1 && budget > 0; --pos) {
                    if (seq == &p && seq->size() <= 1) break;
                    std::vector<Token> shrunk;
                    shrunk.reserve(static_cast<std::size_t>(seq->size()) - 1);
                    for (int t = 1; t <= seq->size(); ++t) {
                        if (t != pos) shrunk.push_back(seq->at1(t));
                    }
                    Sequence candidate{std::move(shrunk)};
                    --budget;
                    const bool bad = seq == &a ? still_bad(candidate, b, p)
                                   : seq == &b ? still_bad(a, candidate, p)
                                               : still_bad(a, b, candidate);
                    if (bad) {
                        *seq = std::move(candidate);
                        changed = true;
                    }
                }
            }
        }
    }

    BenchMismatch out;
    out.lengths = evaluate_all(algorithms, a, b, p);
    out.a = std::move(a);
    out.b = std::move(b);
    out.p = std::move(p);
    return out;
}

} // namespace

double fit_log_log_exponent(const std::vector<int>& sizes,
                            const std::vector<std::int64_t>& times_ns) {
    const std::size_t count = sizes.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const double x = std::log(static_cast<double>(sizes[k]));
        const double y = std::log(std::max<double>(1.0, static_cast<double>(times_ns[k])));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = count * sxx - sx * sx;
    return (count * sxy - sx * sy) / denom;
}

BenchReport run_bench(const BenchSpec& spec) {
    if (spec.sizes.empty()) throw std::invalid_argument("bench: empty size grid");
    for (int n : spec.sizes) {
        if (n < 1) throw std::invalid_argument("bench: sizes must be positive");
    }
    if (spec.reps < 1) throw std::invalid_argument("bench: reps must be positive");
    if (spec.sigma < 1 || spec.sigma > 256) throw std::invalid_argument("bench: sigma out of range");
    if (spec.algorithms.empty()) throw std::invalid_argument("bench: no algorithms selected");
    for (const std::string& name : spec.algorithms) {
        if (name != "quadratic" && name != "cubic" && name != "sparse") {
            throw std::invalid_argument("bench: unknown algorithm: " + name);
        }
        if ((name == "cubic" || name == "sparse") && spec.constraint_len < 1) {
            throw std::invalid_argument("bench: " + name + " needs a non-empty constraint");
        }
    }
    if (spec.constraint_len < 0) throw std::invalid_argument("bench: negative constraint length");

    stabilize_allocator();

    const Token base = spec.sigma <= 26 ? Token{'a'} : Token{0};
    BenchReport report;
    report.spec = spec;

    std::mt19937_64 rng(spec.seed);
    for (int n : spec.sizes) {
        BenchSizeResult size_result;
        size_result.n = n;
        const int r = std::min(spec.constraint_len, n);

        struct Instance {
            Sequence a, b, p;
        };
        std::vector<Instance> instances;
        instances.reserve(static_cast<std::size_t>(spec.reps));
        for (int rep = 0; rep < spec.reps; ++rep) {
            Instance inst;
            inst.a = random_sequence(rng, n, spec.sigma, base);
            inst.b = random_sequence(rng, n, spec.sigma, base);
            inst.p = random_sequence(rng, r, spec.sigma, base);
            instances.push_back(std::move(inst));
        }

        // Untimed warmup at this size: grows the heap and touches the pages
        // the timed runs will reuse.
        for (const std::string& name : spec.algorithms) {
            (void)run_algorithm(name, instances.front().a, instances.front().b,
                                instances.front().p);
        }

        for (int rep = 0; rep < spec.reps; ++rep) {
            const Sequence& a = instances[static_cast<std::size_t>(rep)].a;
            const Sequence& b = instances[static_cast<std::size_t>(rep)].b;
            const Sequence& p = instances[static_cast<std::size_t>(rep)].p;

            std::map<std::string, std::optional<int>> lengths;
            for (const std::string& name : spec.algorithms) {
                const auto start = Clock::now();
                const std::optional<int> value = run_algorithm(name, a, b, p);
                const auto stop = Clock::now();
                size_result.times_ns[name].push_back(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
                lengths[name] = value;
            }
            if (lengths_disagree(lengths)) {
                report.agreement = false;
                report.mismatch = minimize(spec.algorithms, a, b, p);
                report.per_size.push_back(std::move(size_result));
                return report;
            }
            size_result.lengths.push_back(lengths.begin()->second);
        }
        for (const auto& [name, times] : size_result.times_ns) {
            size_result.median_ns[name] = median(times);
        }
        report.per_size.push_back(std::move(size_result));
    }

    if (report.per_size.size() >= 2) {
        for (const std::string& name : spec.algorithms) {
            std::vector<std::int64_t> medians;
            medians.reserve(report.per_size.size());
            for (const BenchSizeResult& s : report.per_size) medians.push_back(s.median_ns.at(name));
            report.fitted_exponent[name] = fit_log_log_exponent(spec.sizes, medians);
        }
    }
    return report;
}

} // namespace striclcs
