#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "addrep/convolution.hpp"
#include "addrep/integer_set.hpp"

namespace addrep {

using Count = conv::Count;

// Exact counts R_{A,k}(0..horizon) of ORDERED k-tuples: for A = {0, 1},
// R_{A,2}(1) = 2 because (0, 1) and (1, 0) are distinct solutions. Under
// this convention a Sidon set is one with R_{A,2}(n) <= 2 everywhere.
struct RepSeries {
    int k = 2;
    std::int64_t horizon = -1;
    std::vector<Count> values;

    // R(n) with R(n) = 0 for n < 0. Throws HorizonError past the horizon.
    Count at(std::int64_t n) const;
    Count max() const;
};

// A(n) = #{a in A : a <= n}.
std::int64_t counting_function(const IntegerSet& a, std::int64_t n);

// Characteristic function; 0 for negative arguments.
int chi(const IntegerSet& a, std::int64_t n);

// (k-1)-fold self-convolution of the characteristic vector, truncated to
// [0, limit]. Values above a.bound() describe the finite set itself, so
// limit may go up to k * a.bound().
RepSeries rep_series(const IntegerSet& a, int k, std::int64_t limit,
                     conv::Method method = conv::Method::automatic);

// l-th forward difference; the result is l entries shorter.
std::vector<std::int64_t> delta(std::span<const std::int64_t> s, int l);

// B(A, N): number of block starts n <= N (n in A, n - 1 not in A).
std::int64_t block_count(const IntegerSet& a, std::int64_t n);

// sum_i lambda_i chi_A(m - i) for m in [0, limit]. Limit past the bound is
// a horizon error.
std::vector<std::int64_t> weighted_window(const IntegerSet& a, const WeightVector& lam,
                                          std::int64_t limit);

// B(A, lambda, n) = #{0 <= m <= n : sum_i lambda_i chi_A(m - i) != 0}.
std::int64_t weighted_block_count(const IntegerSet& a, const WeightVector& lam, std::int64_t n);

// B(A, lambda, m) for every m in [0, n].
std::vector<std::int64_t> weighted_block_series(const IntegerSet& a, const WeightVector& lam,
                                                std::int64_t n);

// B(A, m) for every m in [0, n].
std::vector<std::int64_t> block_count_series(const IntegerSet& a, std::int64_t n);

// L(n) = sum_i lambda_i R_A(n - i), exact. Requires a k = 2 series.
std::int64_t weighted_rep(const WeightVector& lam, const RepSeries& rep, std::int64_t n);

// L(n) for every n in [0, rep.horizon].
std::vector<std::int64_t> weighted_rep_series(const WeightVector& lam, const RepSeries& rep);

} // namespace addrep
