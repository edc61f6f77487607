#include <doctest.h>

#include <random>

#include "addrep/convolution.hpp"
#include "addrep/errors.hpp"

namespace conv = addrep::conv;
using conv::Count;

namespace {

std::vector<Count> direct(const std::vector<Count>& x, const std::vector<Count>& y, std::size_t limit) {
    std::vector<Count> out(limit + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size() && i + j <= limit; ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

} // namespace

TEST_CASE("small products agree on both routes") {
    const std::vector<Count> x{1, 1};
    const auto sb = conv::multiply(x, x, 2, conv::Method::schoolbook);
    const auto nt = conv::multiply(x, x, 2, conv::Method::ntt);
    CHECK(sb == std::vector<Count>{1, 2, 1});
    CHECK(nt == sb);
    CHECK(conv::multiply(x, x, 5, conv::Method::ntt) == std::vector<Count>{1, 2, 1, 0, 0, 0});
    CHECK(conv::multiply(x, std::vector<Count>{}, 3) == std::vector<Count>(4, 0));
}

TEST_CASE("transform route is bit-exact against schoolbook on random inputs") {
    std::mt19937_64 rng(20261018);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 1 + rng() % 3000;
        const std::size_t m = 1 + rng() % 3000;
        const Count cap = round % 3 == 0 ? 2 : (round % 3 == 1 ? 1000 : 1u << 20);
        std::vector<Count> x(n), y(m);
        for (auto& v : x) v = rng() % cap;
        for (auto& v : y) v = rng() % cap;
        const std::size_t limit = rng() % (n + m + 5);
        const auto expect = direct(x, y, limit);
        REQUIRE(conv::multiply(x, y, limit, conv::Method::schoolbook) == expect);
        REQUIRE(conv::multiply(x, y, limit, conv::Method::ntt) == expect);
        REQUIRE(conv::multiply(x, x, limit, conv::Method::ntt) == direct(x, x, limit));
    }
}

TEST_CASE("transform route reconstructs values above 2^32 exactly") {
    // Each coefficient of (c, c, ..., c)^2 is c^2 * (terms); pick c near 2^28.
    const Count c = (Count{1} << 28) + 12345;
    const std::vector<Count> x(64, c);
    const auto expect = direct(x, x, 126);
    CHECK(expect[63] == c * c * 64);
    CHECK(conv::multiply(x, x, 126, conv::Method::ntt) == expect);
}

TEST_CASE("overflow is an error, never wraparound") {
    const std::vector<Count> big{Count{1} << 40, Count{1} << 40};
    CHECK_THROWS_AS(conv::multiply(big, big, 2, conv::Method::schoolbook), addrep::OverflowError);
    CHECK_THROWS_AS(conv::multiply(big, big, 2, conv::Method::ntt), addrep::OverflowError);
    CHECK_THROWS_AS(conv::multiply(big, big, 2), addrep::OverflowError);
    // 2^80 still reconstructs exactly before the range check; 2^88 does not.
    CHECK(conv::ntt_feasible(big, big, 2));
    const std::vector<Count> huge{Count{1} << 44, Count{1} << 44};
    CHECK_FALSE(conv::ntt_feasible(huge, huge, 2));
    CHECK_THROWS_AS(conv::multiply(huge, huge, 2), addrep::OverflowError);
}

TEST_CASE("automatic route picks schoolbook for sparse input and transforms for dense") {
    std::vector<Count> sparse(1 << 21, 0);
    sparse[0] = sparse[1000] = sparse[(1 << 21) - 1] = 1;
    CHECK(conv::choose_method(sparse, sparse, (1 << 22)) == conv::Method::schoolbook);
    std::vector<Count> dense(1 << 15, 1);
    CHECK(conv::choose_method(dense, dense, 1 << 16) == conv::Method::ntt);
}
