#include "addrep/convolution.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "addrep/errors.hpp"

namespace addrep::conv {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// p = c * 2^k + 1 with primitive root 3; the smallest 2-adic order is 2^23.
// The moduli are template arguments so every reduction is by a constant.
constexpr std::array<u32, 3> kPrimes{998244353u, 167772161u, 469762049u};
constexpr u32 kGenerator = 3;

constexpr u32 pow_mod(u64 base, u64 exp, u32 mod) {
    u64 result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<u32>(result);
}

template <u32 Mod>
void transform(std::vector<u32>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    std::vector<u32> twiddle(n / 2 + 1);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u32 w = pow_mod(kGenerator, (Mod - 1) / len, Mod);
        if (inverse) {
            w = pow_mod(w, Mod - 2, Mod);
        }
        const std::size_t half = len / 2;
        twiddle[0] = 1;
        for (std::size_t k = 1; k < half; ++k) {
            twiddle[k] = static_cast<u32>(u64{twiddle[k - 1]} * w % Mod);
        }
        for (std::size_t i = 0; i < n; i += len) {
            u32* lo = a.data() + i;
            u32* hi = lo + half;
            for (std::size_t k = 0; k < half; ++k) {
                const u32 u = lo[k];
                const u32 v = static_cast<u32>(u64{hi[k]} * twiddle[k] % Mod);
                lo[k] = u + v >= Mod ? u + v - Mod : u + v;
                hi[k] = u >= v ? u - v : u + Mod - v;
            }
        }
    }
    if (inverse) {
        const u32 n_inv = pow_mod(n, Mod - 2, Mod);
        for (auto& x : a) {
            x = static_cast<u32>(u64{x} * n_inv % Mod);
        }
    }
}

bool is_square(std::span<const Count> x, std::span<const Count> y) {
    return x.data() == y.data() && x.size() == y.size();
}

std::vector<u32> reduce(std::span<const Count> x, std::size_t size, u32 mod) {
    std::vector<u32> out(size, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = static_cast<u32>(x[i] % mod);
    }
    return out;
}

template <u32 Mod>
std::vector<u32> residues_product(std::span<const Count> x, std::span<const Count> y,
                                  std::size_t size) {
    auto fx = reduce(x, size, Mod);
    transform<Mod>(fx, false);
    // Squaring needs one forward transform.
    const bool square = is_square(x, y);
    std::vector<u32> fy;
    if (!square) {
        fy = reduce(y, size, Mod);
        transform<Mod>(fy, false);
    }
    const auto& g = square ? fx : fy;
    for (std::size_t i = 0; i < size; ++i) {
        fx[i] = static_cast<u32>(u64{fx[i]} * g[i] % Mod);
    }
    transform<Mod>(fx, true);
    return fx;
}

std::span<const Count> clip(std::span<const Count> v, std::size_t limit) {
    std::size_t n = std::min(v.size(), limit + 1);
    while (n > 0 && v[n - 1] == 0) {
        --n;
    }
    return v.first(n);
}

std::size_t nonzeros(std::span<const Count> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Count c) { return c != 0; }));
}

u128 saturating_mul(u128 a, u128 b) {
    if (a != 0 && b > std::numeric_limits<u128>::max() / a) {
        return std::numeric_limits<u128>::max();
    }
    return a * b;
}

// Upper bound on any coefficient of the product.
u128 coefficient_bound(std::span<const Count> x, std::span<const Count> y) {
    if (x.empty() || y.empty()) {
        return 0;
    }
    const u128 mx = *std::max_element(x.begin(), x.end());
    const u128 my = *std::max_element(y.begin(), y.end());
    const u128 terms = std::min(nonzeros(x), nonzeros(y));
    return saturating_mul(saturating_mul(mx, my), terms);
}

u128 prime_product() {
    return u128{kPrimes[0]} * kPrimes[1] * kPrimes[2];
}

// Fewest primes whose product exceeds every coefficient of the product.
std::size_t primes_needed(std::span<const Count> x, std::span<const Count> y) {
    const u128 bound = coefficient_bound(x, y);
    if (bound < kPrimes[0]) {
        return 1;
    }
    if (bound < u128{kPrimes[0]} * kPrimes[1]) {
        return 2;
    }
    return 3;
}

// Cyclic length that holds the full linear product, so no index wraps.
std::size_t transform_size(std::size_t xs, std::size_t ys) {
    return std::bit_ceil(xs + ys - 1);
}

std::vector<Count> multiply_schoolbook(std::span<const Count> x, std::span<const Count> y,
                                       std::size_t limit) {
    std::vector<Count> out(limit + 1, 0);
    if (nonzeros(x) > nonzeros(y)) {
        std::swap(x, y);
    }
    std::vector<std::size_t> ynz;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] != 0) {
            ynz.push_back(j);
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (const auto j : ynz) {
            if (i + j > limit) {
                break;
            }
            out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
        }
    }
    return out;
}

std::vector<Count> multiply_ntt(std::span<const Count> x, std::span<const Count> y,
                                std::size_t limit) {
    std::vector<Count> out(limit + 1, 0);
    if (x.empty() || y.empty()) {
        return out;
    }
    const std::size_t size = transform_size(x.size(), y.size());
    if (size > kMaxTransformLength) {
        throw LengthError("product too long for the transform route");
    }
    if (coefficient_bound(x, y) >= prime_product()) {
        throw OverflowError("coefficients may exceed the exact range of the transform route");
    }
    const std::size_t primes = primes_needed(x, y);
    const std::size_t n = std::min(limit + 1, x.size() + y.size() - 1);
    const auto r1 = residues_product<kPrimes[0]>(x, y, size);
    if (primes == 1) {
        std::copy_n(r1.begin(), n, out.begin());
        return out;
    }
    const auto r2 = residues_product<kPrimes[1]>(x, y, size);
    std::vector<u32> r3;
    if (primes == 3) {
        r3 = residues_product<kPrimes[2]>(x, y, size);
    }
    const u64 p1 = kPrimes[0];
    const u64 p2 = kPrimes[1];
    const u64 p3 = kPrimes[2];
    const u64 inv_p1_mod_p2 = pow_mod(p1, p2 - 2, static_cast<u32>(p2));
    const u64 p1p2_mod_p3 = p1 * p2 % p3;
    const u64 inv_p1p2_mod_p3 = pow_mod(p1p2_mod_p3, p3 - 2, static_cast<u32>(p3));
    for (std::size_t i = 0; i < n; ++i) {
        const u64 a1 = r1[i];
        const u64 k2 = (r2[i] + p2 - a1 % p2) % p2 * inv_p1_mod_p2 % p2;
        u128 value = u128{a1} + u128{p1} * k2;
        if (primes == 3) {
            const u64 partial_mod_p3 = (a1 + p1 % p3 * k2) % p3;
            const u64 k3 = (r3[i] + p3 - partial_mod_p3) % p3 * inv_p1p2_mod_p3 % p3;
            value += u128{p1} * p2 * k3;
        }
        if (value > std::numeric_limits<Count>::max()) {
            throw OverflowError("count exceeds 64-bit range at index " + std::to_string(i));
        }
        out[i] = static_cast<Count>(value);
    }
    return out;
}

} // namespace

Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("count addition overflows 64-bit range");
    }
    return r;
}

Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("count multiplication overflows 64-bit range");
    }
    return r;
}

bool ntt_feasible(std::span<const Count> x, std::span<const Count> y, std::size_t limit) {
    x = clip(x, limit);
    y = clip(y, limit);
    if (x.empty() || y.empty()) {
        return true;
    }
    return transform_size(x.size(), y.size()) <= kMaxTransformLength &&
           coefficient_bound(x, y) < prime_product();
}

Method choose_method(std::span<const Count> x, std::span<const Count> y, std::size_t limit) {
    x = clip(x, limit);
    y = clip(y, limit);
    if (x.empty() || y.empty() || !ntt_feasible(x, y, limit)) {
        return Method::schoolbook;
    }
    // Compare pair count against the length-L transforms the route would run.
    const double pairs = static_cast<double>(nonzeros(x)) * static_cast<double>(nonzeros(y));
    const double size = static_cast<double>(transform_size(x.size(), y.size()));
    const double transforms = static_cast<double>(primes_needed(x, y) * (is_square(x, y) ? 2 : 3));
    const double transform_cost = transforms * size * std::max(1.0, std::log2(size)) * 4.0;
    return pairs <= transform_cost ? Method::schoolbook : Method::ntt;
}

std::vector<Count> multiply(std::span<const Count> x, std::span<const Count> y, std::size_t limit,
                            Method method) {
    x = clip(x, limit);
    y = clip(y, limit);
    if (method == Method::automatic) {
        method = choose_method(x, y, limit);
    }
    if (method == Method::ntt) {
        return multiply_ntt(x, y, limit);
    }
    return multiply_schoolbook(x, y, limit);
}

} // namespace addrep::conv
