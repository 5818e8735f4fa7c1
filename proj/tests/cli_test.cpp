// End-to-end tests for the permlab command-line tool: exit codes, report
// text on stdout, report files, and the verification suite.  The binary
// path is injected by the build as PERMLAB_CLI_PATH.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  ///< stdout and stderr, merged
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(PERMLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = ::pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("permlab_cli_test_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

int count_lines_starting_with(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text.compare(pos, prefix.size(), prefix) == 0) ++count;
        const std::size_t next = text.find('\n', pos);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return count;
}

}  // namespace

TEST_CASE("analyze maps verdicts to exit codes and is byte-stable") {
    const RunResult pass = run_cli("analyze 'PSL(2,11)' --p 5");
    CHECK(pass.exit_code == 0);
    CHECK(contains(pass.output, "check: maximal-analysis"));
    CHECK(contains(pass.output, "group: PSL(2,11)"));
    CHECK(contains(pass.output, "verdict: pass"));
    CHECK_FALSE(contains(pass.output, "time-ms"));

    const RunResult again = run_cli("analyze 'PSL(2,11)' --p 5");
    CHECK(again.output == pass.output);

    const RunResult fail = run_cli("analyze 'PGL(2,11)' --p 2");
    CHECK(fail.exit_code == 1);
    CHECK(contains(fail.output, "witness: index=55 order=24 type=Sym(4)"));
    CHECK(contains(fail.output, "verdict: fail"));
}

TEST_CASE("usage, parse, and precondition errors exit with code 2") {
    const RunResult unknown = run_cli("analyze 'Foo(9)' --p 2");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output, "unknown group token"));

    const RunResult missing_p = run_cli("analyze 'Sym(4)'");
    CHECK(missing_p.exit_code == 2);

    const RunResult no_command = run_cli("");
    CHECK(no_command.exit_code == 2);

    const RunResult even_sieve = run_cli("sieve --p 2");
    CHECK(even_sieve.exit_code == 2);
    CHECK(contains(even_sieve.output, "odd prime"));

    const RunResult bad_q = run_cli("sylow-normalizers --q 6");
    CHECK(bad_q.exit_code == 2);

    const RunResult unsolvable_series = run_cli("series 'Sym(5)'");
    CHECK(unsolvable_series.exit_code == 2);
}

TEST_CASE("group-spec files are accepted wherever a group name is") {
    const auto spec = temp_file("w24.spec");
    write_file(spec,
               "# four-point symmetric group\n"
               "name W24\n"
               "degree 4\n"
               "gen (1 2 3 4)\n"
               "gen (1 2)\n"
               "expect-order 24\n");
    const RunResult run = run_cli("analyze " + spec.string() + " --p 3");
    CHECK(run.exit_code == 1);
    CHECK(contains(run.output, "group: W24"));
    CHECK(contains(run.output, "witness: index=4 order=6 type=Sym(3)"));

    const auto bad = temp_file("bad.spec");
    write_file(bad, "degree 4\ngen (1 2 3 4\n");
    const RunResult malformed = run_cli("analyze " + bad.string() + " --p 2");
    CHECK(malformed.exit_code == 2);
    CHECK(contains(malformed.output, "error:"));

    std::filesystem::remove(spec);
    std::filesystem::remove(bad);
}

TEST_CASE("groups beyond the enumeration cutoff point at the catalog") {
    const RunResult too_big = run_cli("analyze 'PSL(5,2)' --p 5");
    CHECK(too_big.exit_code == 2);
    CHECK(contains(too_big.output, "cutoff"));
    CHECK(contains(too_big.output, "catalog-check"));

    const RunResult catalog = run_cli("catalog-check 'PSL(5,2)' --p 5");
    CHECK(catalog.exit_code == 0);
    CHECK(contains(catalog.output, "ATLAS"));
    CHECK(contains(catalog.output, "row: index=64512 order=155"));
    CHECK(contains(catalog.output, "verdict: pass"));

    const RunResult listing = run_cli("catalog-check --list");
    CHECK(listing.exit_code == 0);
    CHECK(contains(listing.output, "PSL(5,2) order=9999360"));
    CHECK(contains(listing.output, "PSL(3,512) order=4722348433286897860608"));

    const RunResult missing = run_cli("catalog-check 'PSL(9,9)' --p 5");
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "no catalog entry"));
}

TEST_CASE("series, sylow-normalizers, and sieve print structured reports") {
    const RunResult series = run_cli("series Ex72_43");
    CHECK(series.exit_code == 0);
    CHECK(contains(series.output, "term-orders: 1,3,12,36,72"));
    CHECK(contains(series.output, "p-length: 2"));
    CHECK(contains(series.output, "verdict: pass"));

    const RunResult odd_series = run_cli("series Ex324_160 --p 3");
    CHECK(odd_series.exit_code == 0);
    CHECK(contains(odd_series.output, "term-orders: 1,1,27,108,324"));

    const RunResult sylow = run_cli("sylow-normalizers --q 11");
    CHECK(sylow.exit_code == 0);
    CHECK(contains(sylow.output,
                   "case: r=11 normalizer-order=55 expected-order=55 shape=defining ok=yes"));

    const RunResult sieve = run_cli("sieve --p 19 --n-max 5 --d-max 11");
    CHECK(sieve.exit_code == 0);
    CHECK(contains(sieve.output, "candidate: n=3 d=9 repunit=262657 verified=yes"));
}

TEST_CASE("report files carry the timing comment that stdout omits") {
    const auto report = temp_file("s4.report");
    const RunResult run = run_cli("analyze 'Sym(4)' --p 2 --report " + report.string());
    CHECK(run.exit_code == 0);
    CHECK_FALSE(contains(run.output, "time-ms"));
    const std::string text = read_file(report);
    CHECK(contains(text, "verdict: pass"));
    CHECK(contains(text, "# time-ms: "));
    std::filesystem::remove(report);
}

TEST_CASE("the verification suite runs every item against its expectation") {
    const RunResult filtered = run_cli("verify-suite --filter sylow");
    CHECK(filtered.exit_code == 0);
    CHECK(count_lines_starting_with(filtered.output, "item sylow-normalizers-") == 5);
    CHECK(contains(filtered.output, "summary: 5 items, 0 mismatches"));

    const auto out_dir = temp_file("suite_out");
    const RunResult full = run_cli("verify-suite --out " + out_dir.string());
    CHECK(full.exit_code == 0);
    CHECK(count_lines_starting_with(full.output, "item ") >= 25);
    CHECK(contains(full.output, " 0 mismatches"));
    CHECK(contains(full.output, "verdict: pass"));
    CHECK(contains(full.output, "item recorded-PSL(3,3)-p3: expected=recorded"));
    CHECK(std::filesystem::exists(out_dir / "summary.txt"));
    const std::string recorded = read_file(out_dir / "recorded-PSL-3-3--p3.txt");
    CHECK(contains(recorded, "witness: index=234 order=24 type=Sym(4)"));
    CHECK(contains(recorded, "# time-ms: "));
    std::filesystem::remove_all(out_dir);
}

TEST_CASE("expectation overrides surface mismatches and unknown items") {
    const auto expectations = temp_file("expect.txt");
    write_file(expectations, "# deliberately wrong\nanalyze-Alt(5)-p2 fail\n");
    const RunResult mismatch =
        run_cli("verify-suite --filter 'analyze-Alt(5)-p2' --expect " + expectations.string());
    CHECK(mismatch.exit_code == 1);
    CHECK(contains(mismatch.output, "item analyze-Alt(5)-p2: expected=fail computed=pass MISMATCH"));
    CHECK(contains(mismatch.output, "verdict: fail"));

    write_file(expectations, "no-such-item pass\n");
    const RunResult unknown = run_cli("verify-suite --expect " + expectations.string());
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output, "no-such-item"));
    std::filesystem::remove(expectations);
}
