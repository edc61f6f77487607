#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "addrep/cli.hpp"
#include "addrep/construct.hpp"
#include "addrep/io.hpp"

namespace fs = std::filesystem;
using addrep::io::read_file;

namespace {

const std::string kBin = ADDREP_BIN;
const fs::path kGolden = GOLDEN_DIR;

std::string golden(const std::string& name) {
    return (kGolden / name).string();
}

// Runs the installed binary through the shell; stdout/stderr go to files.
int sh(const std::string& args, const std::string& tag = "last") {
    const std::string cmd = kBin + " " + args + " > " + tag + ".stdout 2> " + tag + ".stderr";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::current_path() / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("generate greedy-sidon writes the golden set and report") {
    const auto out = scratch("g8").string();
    CHECK(sh("generate greedy-sidon --count 8 --out " + out) == addrep::cli::kOk);
    CHECK(read_file(out) == read_file(golden("greedy8.txt")));
    CHECK(read_file(out + ".report.json") == read_file(golden("greedy8.report.json")));
    CHECK(fs::exists(out + ".manifest.json"));
}

TEST_CASE("generate theorem2 on an empty substrate is bad input") {
    const auto out = scratch("t2_empty").string();
    CHECK(sh("generate theorem2 --sidon " + golden("empty.txt") + " --N 1 --d 1 --out " + out) ==
          addrep::cli::kBadInput);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("generate lemma1 is deterministic and requires a seed") {
    const auto a = scratch("l1a").string();
    const auto b = scratch("l1b").string();
    const std::string args = "generate lemma1 --M 512 --d 1 --lambda 1,-1 --seed 7 --max-trials 50 --out ";
    CHECK(sh(args + a) == addrep::cli::kOk);
    CHECK(sh(args + b) == addrep::cli::kOk);
    CHECK(read_file(a) == read_file(b));
    CHECK(read_file(a + ".report.json") == read_file(b + ".report.json"));
    CHECK(read_file(a + ".report.json").find("\"rng\": \"philox4x32-10\"") != std::string::npos);

    CHECK(sh("generate lemma1 --M 512 --d 1 --lambda 1,-1 --out " + scratch("noseed").string()) ==
          addrep::cli::kBadInput);
}

TEST_CASE("sampling failure exits with 3") {
    // Find a seed whose first draw on [0, 3] is empty; M = 4, d = 0 needs B >= 1.
    std::uint64_t seed = 0;
    while (!addrep::lemma1_draw(4, 0, seed, 0).empty()) ++seed;
    CHECK(sh("generate lemma1 --M 4 --d 0 --lambda 1 --max-trials 1 --seed " + std::to_string(seed) +
             " --out " + scratch("fail").string()) == addrep::cli::kSamplingFailure);
    CHECK(read_file("last.stderr").find("sampling failure") != std::string::npos);
}

TEST_CASE("analyze golden series") {
    CHECK(sh("analyze rep --k 2 " + golden("zero_one.txt")) == addrep::cli::kOk);
    CHECK(read_file("last.stdout") == read_file(golden("rep_zero_one.tsv")));

    const auto wb = scratch("wb.tsv").string();
    CHECK(sh("analyze weighted-blocks --lambda -1,1 " + golden("set235.txt") + " --n 6 --out " + wb) ==
          addrep::cli::kOk);
    CHECK(read_file(wb) == read_file(golden("wblocks235.tsv")));

    CHECK(sh("analyze delta --l 2 " + golden("squares.tsv")) == addrep::cli::kOk);
    CHECK(read_file("last.stdout") == read_file(golden("squares_delta2.tsv")));
}

TEST_CASE("malformed set file reports its line and exits with 2") {
    CHECK(sh("analyze rep " + golden("malformed.txt")) == addrep::cli::kBadInput);
    CHECK(read_file("last.stderr").find("line 3") != std::string::npos);
    CHECK(sh("analyze rep " + golden("no_such_file.txt")) == addrep::cli::kBadInput);
    CHECK(sh("analyze nonsense " + golden("zero.txt")) == addrep::cli::kBadInput);
    CHECK(sh("frobnicate") == addrep::cli::kBadInput);
}

TEST_CASE("audit exit codes: holds, violated, hypothesis failure") {
    const auto t1 = scratch("t1").string();
    CHECK(sh("audit t1 " + golden("greedy8.txt") + " --lambda 1 --out " + t1) == addrep::cli::kOk);
    CHECK(read_file(t1 + ".json") == read_file(golden("greedy8.t1.json")));
    CHECK(read_file(t1 + ".tsv").starts_with("n\tlhs\trhs\n0\t0\tNA\n"));

    // A = {0}: lhs_sup = R(0) = 1 but no rhs entry is defined on [0, 0].
    CHECK(sh("audit t2 " + golden("zero.txt") + " --lambda 1 --N 1 --out " + scratch("t2").string()) ==
          addrep::cli::kProxyViolated);

    CHECK(sh("audit t3 " + golden("greedy8.txt") + " --lambda 1,1 --out " + scratch("t3").string()) ==
          addrep::cli::kBadInput);
}

TEST_CASE("p1-scan writes a three-row ratio table") {
    const auto p1 = scratch("p1").string();
    CHECK(sh("audit p1-scan " + golden("greedy8.txt") + " --lambda 1,-1 --theta 0.5,1.0,1.5 --out " + p1) ==
          addrep::cli::kOk);
    std::istringstream tsv(read_file(p1 + ".tsv"));
    std::string line;
    int rows = -1;
    while (std::getline(tsv, line)) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("replay reproduces outputs byte for byte") {
    const auto sub = scratch("sub.txt");
    addrep::io::write_file(sub, read_file(golden("greedy8.txt")));
    const auto first = scratch("t2a").string();
    CHECK(sh("generate theorem2 --sidon " + sub.string() + " --N 1 --d 0 --out " + first) == addrep::cli::kOk);
    const auto second = scratch("t2b").string();
    CHECK(sh("replay " + first + ".manifest.json --out " + second) == addrep::cli::kOk);
    CHECK(read_file(first) == read_file(second));
    CHECK(read_file(first + ".report.json") == read_file(second + ".report.json"));

    // Altering the recorded input makes replay refuse.
    addrep::io::write_file(sub, "1\n2\n4\n");
    CHECK(sh("replay " + first + ".manifest.json --out " + second) == addrep::cli::kBadInput);
}

TEST_CASE("in-process entry point matches the binary") {
    std::ostringstream out, err;
    CHECK(addrep::cli::run({"analyze", "rep", "--k", "2", golden("zero_one.txt")}, out, err) ==
          addrep::cli::kOk);
    CHECK(out.str() == read_file(golden("rep_zero_one.tsv")));
    CHECK(addrep::cli::run({"audit", "t3", golden("zero_one.txt"), "--lambda", "1,1"}, out, err) ==
          addrep::cli::kBadInput);
}
