// Black-box CLI tests: the binary path comes in through STRICLCS_BIN_PATH,
// inputs go through temp files, and output/exit codes are captured via popen.
// Also covers the sequence-file parsing rules directly.
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "striclcs/io.hpp"
#include "test_util.hpp"

using nlohmann::json;
using testutil::seq;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("striclcs_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::ofstream out(path_, std::ios::binary);
        out << contents;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string binary() { return std::string(STRICLCS_BIN_PATH); }

} // namespace

TEST_CASE("sequence file parsing rules") {
    CHECK(striclcs::parse_sequence_text("abc\n") == seq("abc"));
    CHECK(striclcs::parse_sequence_text("abc") == seq("abc"));
    CHECK(striclcs::parse_sequence_text("abc\r\n") == seq("abc"));
    CHECK(striclcs::parse_sequence_text("") == seq(""));
    // Interior newlines are tokens in raw mode; only the trailing one is meta.
    CHECK(striclcs::parse_sequence_text("ab\ncd\n") == seq("ab\ncd"));
    // FASTA: headers dropped, line breaks between sequence lines dropped.
    CHECK(striclcs::parse_sequence_text(">h1\nab\nab\n") == seq("abab"));
    CHECK(striclcs::parse_sequence_text(">h1\r\nab\r\nab\r\n") == seq("abab"));
    CHECK(striclcs::parse_sequence_text(">only header\n") == seq(""));
}

TEST_CASE("text mode is bit-exact") {
    TempFile a("aba\n"), b("ab\n");
    const auto res =
        run_cmd(binary() + " " + a.str() + " " + b.str() + " --constraint b 2>/dev/null");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "2\nab\n");

    const auto only = run_cmd(binary() + " " + a.str() + " " + b.str() +
                              " --constraint b --length-only 2>/dev/null");
    CHECK(only.exit_code == 0);
    CHECK(only.out == "2\n");
}

TEST_CASE("no solution exits 1 with the diagnostic on stderr") {
    TempFile a("aa\n"), b("aa\n");
    const auto res =
        run_cmd(binary() + " " + a.str() + " " + b.str() + " --constraint b 2>/dev/null");
    CHECK(res.exit_code == 1);
    CHECK(res.out.empty());
    const auto err = run_cmd(binary() + " " + a.str() + " " + b.str() +
                             " --constraint b 2>&1 1>/dev/null");
    CHECK(err.out == "no solution\n");
}

TEST_CASE("invalid configurations exit 2") {
    TempFile a("aba\n"), b("ab\n"), c("ab\n");
    CHECK(run_cmd(binary() + " /nonexistent/path " + b.str() +
                  " --constraint b 2>/dev/null")
              .exit_code == 2);
    CHECK(run_cmd(binary() + " " + a.str() + " --constraint b 2>/dev/null").exit_code == 2);
    CHECK(run_cmd(binary() + " " + a.str() + " " + b.str() + " 2>/dev/null").exit_code == 2);
    CHECK(run_cmd(binary() + " " + a.str() + " " + b.str() +
                  " --constraint b --constraint-file " + c.str() + " 2>/dev/null")
              .exit_code == 2);
    CHECK(run_cmd(binary() + " " + a.str() + " " + b.str() +
                  " --constraint b --algorithm multi 2>/dev/null")
              .exit_code == 2);
    CHECK(run_cmd(binary() + " " + a.str() + " " + b.str() + " " + c.str() +
                  " --constraint b --algorithm quadratic 2>/dev/null")
              .exit_code == 2);
    CHECK(run_cmd(binary() + " " + a.str() + " " + b.str() +
                  " --constraint b --algorithm cubic 2>/dev/null")
              .exit_code == 2); // cubic is length-only
    CHECK(run_cmd(binary() + " " + a.str() + " " + b.str() +
                  " --constraint '' --algorithm sparse --length-only 2>/dev/null")
              .exit_code == 2); // sparse needs a non-empty constraint
}

TEST_CASE("json run output carries length, sequence, anchor, timings") {
    TempFile a("aba\n"), b("ab\n");
    const auto res = run_cmd(binary() + " " + a.str() + " " + b.str() +
                             " --constraint b --json 2>/dev/null");
    CHECK(res.exit_code == 0);
    const json out = json::parse(res.out);
    CHECK(out["algorithm"] == "quadratic");
    CHECK(out["length"] == 2);
    CHECK(out["sequence"] == "ab");
    CHECK(out["anchor"] == json::array({2, 2}));
    CHECK(out["timings"]["solve_ns"].is_number_integer());
    CHECK(out["timings"]["io_ns"].is_number_integer());
}

TEST_CASE("every pairwise algorithm reports the same length") {
    TempFile a("bcabab\n"), b("abacb\n");
    long expected = -1;
    for (const std::string alg : {"quadratic", "sparse", "cubic", "exhaustive"}) {
        const auto res = run_cmd(binary() + " " + a.str() + " " + b.str() +
                                 " --constraint ba --algorithm " + alg +
                                 " --length-only --json 2>/dev/null");
        CHECK(res.exit_code == 0);
        const json out = json::parse(res.out);
        if (expected < 0) expected = out["length"].get<long>();
        CHECK(out["length"].get<long>() == expected);
        CHECK(out["algorithm"] == alg);
    }
}

TEST_CASE("sparse mode still prints a witness by delegating reconstruction") {
    TempFile a("abab\n"), b("abab\n");
    const auto res = run_cmd(binary() + " " + a.str() + " " + b.str() +
                             " --constraint ba --algorithm sparse 2>/dev/null");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "4\nabab\n");
}

TEST_CASE("multi mode over three files") {
    TempFile a("ab\n"), b("ab\n"), c("ab\n");
    const auto res = run_cmd(binary() + " " + a.str() + " " + b.str() + " " + c.str() +
                             " --constraint a 2>/dev/null");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "2\nab\n");

    const auto js = run_cmd(binary() + " " + a.str() + " " + b.str() + " " + c.str() +
                            " --constraint a --json 2>/dev/null");
    const json out = json::parse(js.out);
    CHECK(out["algorithm"] == "multi");
    CHECK(out["anchor"] == json::array({1, 1, 1}));
}

TEST_CASE("constraint can come from a file, FASTA included") {
    TempFile a(">mainA\nab\nab\n"), b("abab\n"), p(">constraint\nba\n");
    const auto res = run_cmd(binary() + " " + a.str() + " " + b.str() + " --constraint-file " +
                             p.str() + " 2>/dev/null");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "4\nabab\n");
}

TEST_CASE("oversized exhaustive and multi requests exit 2") {
    TempFile big(std::string(17, 'a') + "\n"), small("ab\n");
    CHECK(run_cmd(binary() + " " + big.str() + " " + small.str() +
                  " --constraint a --algorithm exhaustive --length-only 2>/dev/null")
              .exit_code == 2);

    TempFile long_main(std::string(65, 'a') + "\n");
    TempFile m1("ab\n"), m2("ab\n");
    CHECK(run_cmd(binary() + " " + long_main.str() + " " + m1.str() + " " + m2.str() +
                  " --constraint a 2>/dev/null")
              .exit_code == 2);
    TempFile m3("ab\n"), m4("ab\n"), m5("ab\n");
    CHECK(run_cmd(binary() + " " + m1.str() + " " + m2.str() + " " + m3.str() + " " + m4.str() +
                  " " + m5.str() + " --constraint a 2>/dev/null")
              .exit_code == 2);
}

TEST_CASE("bench validates its grid") {
    CHECK(run_cmd(binary() + " --bench '' 2>/dev/null").exit_code == 2);
    CHECK(run_cmd(binary() + " --bench '0,10' 2>/dev/null").exit_code == 2);
    CHECK(run_cmd(binary() + " --bench '10:algs=nope' 2>/dev/null").exit_code == 2);
    TempFile a("ab\n");
    CHECK(run_cmd(binary() + " " + a.str() + " --bench '10,20' 2>/dev/null").exit_code == 2);
}

TEST_CASE("bench runs, agrees, and is deterministic under a fixed seed") {
    const std::string cmd = binary() +
                            " --bench '30,60:r=4:reps=3:algs=quadratic,cubic,sparse'"
                            " --seed 99 2>/dev/null";
    const auto first = run_cmd(cmd);
    CHECK(first.exit_code == 0);
    const json a = json::parse(first.out);
    CHECK(a["agreement"] == true);
    CHECK(a["per_size"].size() == 2);
    CHECK(a["per_size"][0]["times_ns"]["quadratic"].size() == 3);
    CHECK(a["fitted_exponent"].contains("quadratic"));

    const auto second = run_cmd(cmd);
    const json b = json::parse(second.out);
    for (int s = 0; s < 2; ++s) {
        CHECK(a["per_size"][s]["lengths"] == b["per_size"][s]["lengths"]);
    }
}
