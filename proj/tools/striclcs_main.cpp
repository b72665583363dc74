// striclcs -- command-line front end: solve STR-IC-LCS instances from files
// with a choice of algorithm, or benchmark the solvers on random instances.
//
// Exit codes: 0 success, 1 no solution, 2 invalid input or configuration,
// 3 benchmark disagreement.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "striclcs/bench.hpp"
#include "striclcs/io.hpp"
#include "striclcs/multi.hpp"
#include "striclcs/oracle.hpp"
#include "striclcs/solver.hpp"
#include "striclcs/sparse.hpp"

namespace {

using striclcs::Sequence;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr int kExitNoSolution = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitBenchMismatch = 3;
constexpr int kMultiMaxSequences = 4;
constexpr int kMultiMaxLength = 64;

std::int64_t elapsed_ns(Clock::time_point start, Clock::time_point stop) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

json sequence_to_json(const Sequence& s) {
    // Printable byte sequences render as strings, anything else as id arrays.
    bool printable = true;
    for (striclcs::Token t : s.tokens()) {
        if (t > 0x7e || t < 0x20) {
            printable = false;
            break;
        }
    }
    if (printable) return s.to_bytes();
    json arr = json::array();
    for (striclcs::Token t : s.tokens()) arr.push_back(t);
    return arr;
}

struct GridSpec {
    striclcs::BenchSpec bench;
};

// Gridspec: comma-separated sizes, then optional ":key=value" fields, e.g.
//   250,500,1000,2000:r=20:reps=5:sigma=4:algs=quadratic,cubic
striclcs::BenchSpec parse_gridspec(const std::string& text, std::uint64_t seed) {
    striclcs::BenchSpec spec;
    spec.seed = seed;

    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string::npos ? std::string::npos
                                                                      : colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }

    const std::string& sizes = parts.front();
    std::size_t pos = 0;
    while (pos < sizes.size()) {
        const std::size_t comma = sizes.find(',', pos);
        const std::string item =
            sizes.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) spec.sizes.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    for (std::size_t k = 1; k < parts.size(); ++k) {
        const std::string& field = parts[k];
        const std::size_t eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad gridspec field: " + field);
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "r") {
            spec.constraint_len = std::stoi(value);
        } else if (key == "reps") {
            spec.reps = std::stoi(value);
        } else if (key == "sigma") {
            spec.sigma = std::stoi(value);
        } else if (key == "algs") {
            spec.algorithms.clear();
            std::size_t p = 0;
            while (p < value.size()) {
                const std::size_t comma = value.find(',', p);
                spec.algorithms.push_back(value.substr(
                    p, comma == std::string::npos ? std::string::npos : comma - p));
                if (comma == std::string::npos) break;
                p = comma + 1;
            }
        } else {
            throw std::invalid_argument("bad gridspec key: " + key);
        }
    }
    return spec;
}

json report_to_json(const striclcs::BenchReport& report) {
    json out;
    out["mode"] = "bench";
    out["seed"] = report.spec.seed;
    out["sizes"] = report.spec.sizes;
    out["constraint_len"] = report.spec.constraint_len;
    out["sigma"] = report.spec.sigma;
    out["reps"] = report.spec.reps;
    out["algorithms"] = report.spec.algorithms;
    out["agreement"] = report.agreement;

    json per_size = json::array();
    for (const auto& s : report.per_size) {
        json row;
        row["n"] = s.n;
        row["times_ns"] = s.times_ns;
        row["median_ns"] = s.median_ns;
        json lengths = json::array();
        for (const auto& len : s.lengths) {
            lengths.push_back(len ? json(*len) : json(nullptr));
        }
        row["lengths"] = lengths;
        per_size.push_back(std::move(row));
    }
    out["per_size"] = std::move(per_size);

    if (!report.fitted_exponent.empty()) out["fitted_exponent"] = report.fitted_exponent;
    if (report.mismatch) {
        json mis;
        mis["a"] = sequence_to_json(report.mismatch->a);
        mis["b"] = sequence_to_json(report.mismatch->b);
        mis["p"] = sequence_to_json(report.mismatch->p);
        json lens;
        for (const auto& [name, len] : report.mismatch->lengths) {
            lens[name] = len ? json(*len) : json(nullptr);
        }
        mis["lengths"] = std::move(lens);
        out["mismatch"] = std::move(mis);
    }
    return out;
}

int run_bench_mode(const std::string& gridspec, std::uint64_t seed) {
    striclcs::BenchSpec spec;
    try {
        spec = parse_gridspec(gridspec, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: invalid --bench gridspec: " << e.what() << "\n";
        return kExitBadConfig;
    }
    striclcs::BenchReport report;
    try {
        report = striclcs::run_bench(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    std::cout << report_to_json(report).dump(2) << "\n";
    if (!report.agreement) {
        std::cerr << "error: algorithms disagree; minimized instance in report\n";
        return kExitBenchMismatch;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"STR-IC-LCS solver: longest common subsequence containing a "
                 "required substring"};

    std::vector<std::string> files;
    std::string constraint_text;
    std::string constraint_file;
    std::string algorithm = "auto";
    bool length_only = false;
    bool json_output = false;
    std::string bench_grid;
    std::uint64_t seed = 0x5eed;

    app.add_option("files", files, "main sequence files (2 for pairwise, 3+ for multi)");
    auto* copt = app.add_option("--constraint", constraint_text, "constraint as a literal string");
    auto* cfile = app.add_option("--constraint-file", constraint_file,
                                 "file holding the constraint sequence");
    copt->excludes(cfile);
    app.add_option("--algorithm", algorithm,
                   "quadratic | sparse | cubic | exhaustive | multi (default: by file count)")
        ->check(CLI::IsMember({"auto", "quadratic", "sparse", "cubic", "exhaustive", "multi"}));
    app.add_flag("--length-only", length_only, "report only the optimal length");
    app.add_flag("--json", json_output, "emit JSON instead of plain text");
    app.add_option("--bench", bench_grid,
                   "benchmark gridspec: sizes[:r=N][:reps=N][:sigma=N][:algs=a,b]");
    app.add_option("--seed", seed, "RNG seed for --bench instance generation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadConfig;
    }

    if (app.count("--bench") > 0) {
        if (!files.empty() || app.count("--constraint") || app.count("--constraint-file")) {
            std::cerr << "error: --bench generates its own instances; drop the file arguments\n";
            return kExitBadConfig;
        }
        return run_bench_mode(bench_grid, seed);
    }

    if (files.size() < 2) {
        std::cerr << "error: need at least two main sequence files\n";
        return kExitBadConfig;
    }
    if (app.count("--constraint") + app.count("--constraint-file") != 1) {
        std::cerr << "error: exactly one of --constraint / --constraint-file is required\n";
        return kExitBadConfig;
    }

    if (algorithm == "auto") algorithm = files.size() == 2 ? "quadratic" : "multi";
    if ((algorithm == "multi") != (files.size() > 2)) {
        std::cerr << "error: algorithm 'multi' goes with three or more mains; the pairwise "
                     "algorithms need exactly two\n";
        return kExitBadConfig;
    }
    if ((algorithm == "cubic" || algorithm == "exhaustive") && !length_only) {
        std::cerr << "error: '" << algorithm
                  << "' is a length-only baseline; add --length-only\n";
        return kExitBadConfig;
    }

    const auto io_start = Clock::now();
    std::vector<Sequence> mains;
    Sequence constraint;
    try {
        mains.reserve(files.size());
        for (const std::string& f : files) mains.push_back(striclcs::read_sequence_file(f));
        constraint = app.count("--constraint-file")
                         ? striclcs::read_sequence_file(constraint_file)
                         : Sequence::from_bytes(constraint_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    const auto io_stop = Clock::now();

    if (algorithm == "multi") {
        if (files.size() > kMultiMaxSequences) {
            std::cerr << "error: multi mode caps at " << kMultiMaxSequences << " sequences\n";
            return kExitBadConfig;
        }
        for (const Sequence& s : mains) {
            if (s.size() > kMultiMaxLength) {
                std::cerr << "error: multi mode caps sequence length at " << kMultiMaxLength
                          << "\n";
                return kExitBadConfig;
            }
        }
    }
    if (algorithm == "exhaustive") {
        if (mains[0].size() > striclcs::kExhaustiveLimit ||
            mains[1].size() > striclcs::kExhaustiveLimit) {
            std::cerr << "error: exhaustive mode caps sequence length at "
                      << striclcs::kExhaustiveLimit << "\n";
            return kExitBadConfig;
        }
    }

    // Solve.
    std::optional<int> length;
    std::optional<Sequence> witness;
    json anchor_json;
    const auto solve_start = Clock::now();
    try {
        if (algorithm == "quadratic") {
            if (length_only) {
                length = striclcs::solve_length_only(mains[0], mains[1], constraint);
            } else {
                striclcs::StrIcLcsResult res = striclcs::solve(mains[0], mains[1], constraint);
                length = res.length;
                witness = std::move(res.sequence);
                if (res.anchor) anchor_json = json::array({res.anchor->i, res.anchor->j});
            }
        } else if (algorithm == "sparse") {
            striclcs::StrIcLcsResult res = striclcs::solve_sparse(mains[0], mains[1], constraint);
            length = res.length;
            if (res.anchor) anchor_json = json::array({res.anchor->i, res.anchor->j});
            if (res.found() && !length_only) {
                striclcs::StrIcLcsResult full =
                    striclcs::reconstruct_at(mains[0], mains[1], constraint, *res.anchor);
                witness = std::move(full.sequence);
            }
        } else if (algorithm == "cubic") {
            length = striclcs::cubic_str_ic_lcs(mains[0], mains[1], constraint);
        } else if (algorithm == "exhaustive") {
            length = striclcs::exhaustive_str_ic_lcs(mains[0], mains[1], constraint);
        } else { // multi
            striclcs::MultiResult res =
                striclcs::multi_solve({std::move(mains), constraint});
            length = res.length;
            if (!res.anchor.empty()) anchor_json = json(res.anchor);
            if (!length_only) witness = std::move(res.sequence);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    const auto solve_stop = Clock::now();

    if (json_output) {
        json out;
        out["algorithm"] = algorithm;
        out["length"] = length ? json(*length) : json(nullptr);
        if (witness) out["sequence"] = sequence_to_json(*witness);
        if (!anchor_json.is_null()) out["anchor"] = anchor_json;
        out["timings"] = {{"io_ns", elapsed_ns(io_start, io_stop)},
                          {"solve_ns", elapsed_ns(solve_start, solve_stop)}};
        std::cout << out.dump(2) << "\n";
        if (!length) return kExitNoSolution;
        return 0;
    }

    if (!length) {
        std::cerr << "no solution\n";
        return kExitNoSolution;
    }
    std::cout << *length << "\n";
    if (!length_only && witness) std::cout << witness->to_bytes() << "\n";
    return 0;
}
