#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Exact convolution of nonnegative integer count vectors.
//
// Two routes compute the same truncated product:
//  - schoolbook: direct double sum over the nonzero entries, every add and
//    multiply overflow-checked;
//  - ntt: number-theoretic transforms modulo three NTT-friendly primes and
//    Garner/CRT reconstruction. The route is only taken when an a priori
//    bound on every coefficient is below the product of the primes, so the
//    reconstruction is exact; results above 2^64 - 1 still raise.
namespace addrep::conv {

using Count = std::uint64_t;

enum class Method { automatic, schoolbook, ntt };

// Longest transform the prime set supports.
inline constexpr std::size_t kMaxTransformLength = std::size_t{1} << 23;

// (x * y) restricted to indices [0, limit]. Throws OverflowError when any
// coefficient exceeds the range of Count.
std::vector<Count> multiply(std::span<const Count> x, std::span<const Count> y, std::size_t limit,
                            Method method = Method::automatic);

// The route `automatic` would take for these inputs.
Method choose_method(std::span<const Count> x, std::span<const Count> y, std::size_t limit);

// Whether the transform route can represent this product exactly.
bool ntt_feasible(std::span<const Count> x, std::span<const Count> y, std::size_t limit);

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

} // namespace addrep::conv
