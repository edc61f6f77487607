#include <doctest.h>

#include <random>

#include "addrep/errors.hpp"
#include "addrep/sidon.hpp"
#include "oracles.hpp"

using namespace addrep;

namespace {

std::vector<std::int64_t> to_vec(const IntegerSet& a) {
    return {a.elements().begin(), a.elements().end()};
}

} // namespace

TEST_CASE("greedy_sidon prefixes") {
    CHECK(to_vec(greedy_sidon(1)) == std::vector<std::int64_t>{1});
    CHECK(to_vec(greedy_sidon(4)) == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK(to_vec(greedy_sidon(8)) == std::vector<std::int64_t>{1, 2, 4, 8, 13, 21, 31, 45});
    CHECK(to_vec(greedy_sidon(8)) == oracle::greedy_sidon(8));
    CHECK_THROWS_AS(greedy_sidon(0), ParameterError);
}

TEST_CASE("greedy_sidon agrees with the difference-based oracle") {
    CHECK(to_vec(greedy_sidon(120)) == oracle::greedy_sidon(120));
}

TEST_CASE("algebraic_sidon") {
    CHECK(to_vec(algebraic_sidon(2)) == std::vector<std::int64_t>{0, 5});
    CHECK(to_vec(algebraic_sidon(3)) == std::vector<std::int64_t>{0, 7, 13});
    CHECK(to_vec(algebraic_sidon(5)) == std::vector<std::int64_t>{0, 11, 24, 34, 41});
    CHECK(oracle::sidon({0, 11, 24, 34, 41}));
    CHECK_THROWS_AS(algebraic_sidon(9), ParameterError);
    CHECK_THROWS_AS(algebraic_sidon(1), ParameterError);
    for (std::int64_t p = 2; p < 60; ++p) {
        if (is_prime(p)) {
            const auto s = algebraic_sidon(p);
            CHECK(s.size() == static_cast<std::size_t>(p));
            CHECK(s.max_element() < 2 * p * p);
            CHECK(oracle::sidon(to_vec(s)));
        }
    }
}

TEST_CASE("is_sidon") {
    const auto c = is_sidon(IntegerSet({1, 2, 4, 8}));
    CHECK(c.is_sidon);
    CHECK(c.max_rep == 2);
    CHECK(c.verified_horizon == 16);

    const auto bad = is_sidon(IntegerSet({1, 2, 3}));
    CHECK_FALSE(bad.is_sidon);
    CHECK(bad.max_rep == 3);

    const auto single = is_sidon(IntegerSet({7}));
    CHECK(single.is_sidon);
    CHECK(single.max_rep == 1);

    CHECK(is_sidon(IntegerSet({3, 900})).is_sidon);
}

TEST_CASE("is_sidon agrees with the pairwise-sum oracle on random sets") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        const auto elems = oracle::random_elements(rng, 60, 0.08);
        const IntegerSet a(elems, 60);
        CHECK(is_sidon(a).is_sidon == oracle::sidon(elems));
    }
}

TEST_CASE("prune_gaps") {
    CHECK(prune_gaps(IntegerSet({1, 2, 5, 11, 22}), 4) == IntegerSet({11, 22}, 22));
    const IntegerSet s({3, 4, 10, 50});
    CHECK(prune_gaps(s, 0) == s);
    CHECK(prune_gaps(IntegerSet({0, 100}), 99) == IntegerSet({0, 100}));
    CHECK(prune_gaps(IntegerSet({0, 100}), 100).empty());
    CHECK_THROWS_AS(prune_gaps(s, -1), ParameterError);
}

TEST_CASE("prune_gaps properties") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        const auto base = greedy_sidon(10 + static_cast<std::int64_t>(rng() % 40));
        const auto t = static_cast<std::int64_t>(rng() % 200);
        const auto pruned = prune_gaps(base, t);
        if (const auto gap = pruned.min_gap()) {
            CHECK(*gap > t);
        }
        for (const auto x : pruned.elements()) {
            CHECK(base.contains(x));
        }
        CHECK(is_sidon(pruned).is_sidon);
        std::size_t close_pairs = 0;
        const auto e = base.elements();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) close_pairs += (e[j] - e[i] <= t);
        CHECK(pruned.size() + 2 * close_pairs >= base.size());
    }
}
