#pragma once

#include <cstdint>

#include "addrep/integer_set.hpp"

namespace addrep {

struct SidonCertificate {
    std::int64_t verified_horizon = 0;  // 2 * bound of the checked set
    std::uint64_t max_rep = 0;          // max of R_{A,2}(n) over n <= verified_horizon
    bool is_sidon = false;              // max_rep <= 2
};

// Greedy (Mian-Chowla) Sidon sequence starting at this value.
inline constexpr std::int64_t kGreedySidonStart = 1;

// First `count` terms of the greedy Sidon sequence 1, 2, 4, 8, 13, ...
IntegerSet greedy_sidon(std::int64_t count);

// {2 p i + (i^2 mod p) : 0 <= i < p}; Sidon for every prime p.
IntegerSet algebraic_sidon(std::int64_t p);

bool is_prime(std::int64_t n);

SidonCertificate is_sidon(const IntegerSet& a);

// Drops both endpoints of every pair of elements at distance <= threshold.
IntegerSet prune_gaps(const IntegerSet& s, std::int64_t threshold);

} // namespace addrep
