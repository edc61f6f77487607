#include <doctest.h>

#include <random>
#include <sstream>

#include "addrep/errors.hpp"
#include "addrep/io.hpp"
#include "addrep/report_json.hpp"
#include "addrep/sidon.hpp"
#include "oracles.hpp"

using namespace addrep;

namespace {

IntegerSet parse(const std::string& text) {
    std::istringstream in(text);
    return io::parse_set(in);
}

std::string render(const IntegerSet& a) {
    std::ostringstream out;
    io::write_set(out, a);
    return out.str();
}

} // namespace

TEST_CASE("set files parse with comments and blank lines") {
    const auto a = parse("# greedy prefix\n1\n2\n\n4\n  8\n# trailing\n");
    CHECK(a == IntegerSet({1, 2, 4, 8}));
    CHECK(parse("# bound: 6\n2\n3\n5\n") == IntegerSet({2, 3, 5}, 6));
    CHECK(parse("# bound: 5\n").bound() == 5);
    CHECK(parse("").empty());
}

TEST_CASE("set file errors carry the line number") {
    const auto line_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("1\n3\n2\n") == 3);
    CHECK(line_of("1\nx\n") == 2);
    CHECK(line_of("# c\n-4\n") == 2);
    CHECK(line_of("1\n1\n") == 2);
    CHECK(line_of("1.5\n") == 1);
    CHECK(line_of("# bound: 2\n5\n") == 2);
}

TEST_CASE("emitted set files re-parse to the same set") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 200; ++round) {
        const auto bound = static_cast<std::int64_t>(rng() % 500);
        auto elems = oracle::random_elements(rng, bound, (rng() % 100) / 100.0);
        const bool pad = rng() % 2;
        const IntegerSet a(elems, pad || elems.empty() ? std::optional<std::int64_t>(bound + 3)
                                                       : std::nullopt);
        CHECK(parse(render(a)) == a);
    }
    CHECK(render(IntegerSet({1, 2})) == "1\n2\n");
    CHECK(render(IntegerSet({}, 4)) == "# bound: 4\n");
}

TEST_CASE("series files") {
    std::istringstream in("n\tvalue\n3\t0\n4\t1\n5\t4\n");
    const auto s = io::parse_series(in);
    CHECK(s.first_index == 3);
    CHECK(s.values == std::vector<std::int64_t>{0, 1, 4});

    std::ostringstream out;
    const std::vector<std::int64_t> v{2, -2};
    io::write_series(out, 7, std::span<const std::int64_t>(v));
    CHECK(out.str() == "n\tvalue\n7\t2\n8\t-2\n");

    std::istringstream gap("n\tvalue\n0\t1\n2\t1\n");
    CHECK_THROWS_AS(io::parse_series(gap), ParseError);
    std::istringstream headless("0\t1\n");
    CHECK_THROWS_AS(io::parse_series(headless), ParseError);
}

TEST_CASE("flag lists") {
    CHECK(io::parse_int_list("1,-1") == std::vector<std::int64_t>{1, -1});
    CHECK(io::parse_int_list("-1, 0, 2") == std::vector<std::int64_t>{-1, 0, 2});
    CHECK_THROWS_AS(io::parse_int_list("1,,2"), ParameterError);
    CHECK_THROWS_AS(io::parse_int_list("a"), ParameterError);
    CHECK(io::parse_real_list("0.5,1,1.5") == std::vector<double>{0.5, 1.0, 1.5});
    CHECK_THROWS_AS(io::parse_real_list("1.5x"), ParameterError);
}

TEST_CASE("sha256") {
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("construction report JSON keeps large integers as strings") {
    ConstructionReport r;
    r.recipe = Recipe::lemma1;
    r.params = {{"M", "512"}};
    r.seed = 18446744073709551615ull;
    r.rng_algorithm = "philox4x32-10";
    r.trials_used = 2;
    r.verified_bounds.push_back({"big", Relation::at_most, std::int64_t{9007199254740993}, 9007199254740993});
    r.verified_bounds.push_back({"real", Relation::at_least, 64.0, 500});
    const auto j = json::to_json(r);
    CHECK(j["schema"] == "v1");
    CHECK(j["recipe"] == "lemma1");
    CHECK(j["seed"] == "18446744073709551615");
    CHECK(j["verified_bounds"][0]["bound"] == "9007199254740993");
    CHECK(j["verified_bounds"][0]["observed"] == "9007199254740993");
    CHECK(j["verified_bounds"][1]["bound"] == 64.0);
    CHECK(j["verified_bounds"][1]["relation"] == ">=");
    CHECK(j["all_bounds_hold"] == true);
    CHECK(json::dump(j) == json::dump(json::to_json(r)));
}

TEST_CASE("audit TSV marks undefined entries") {
    AuditReport r;
    r.lhs_series = {1, 0};
    r.rhs_series = {std::nullopt, 0.25};
    CHECK(json::audit_tsv(r) == "n\tlhs\trhs\n0\t1\tNA\n1\t0\t0.25\n");
    CHECK(json::format_real(0.1) == "0.1");
    CHECK(json::format_real(1.0 / 3.0) == "0.3333333333333333");
}
