#include "addrep/seqcore.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "addrep/errors.hpp"

namespace addrep {

namespace {

void require_within(const IntegerSet& a, std::int64_t n) {
    if (n > a.bound()) {
        throw HorizonError(n, a.bound());
    }
}

std::int64_t narrow_signed(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("weighted sum exceeds 64-bit signed range");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

Count RepSeries::at(std::int64_t n) const {
    if (n < 0) {
        return 0;
    }
    if (n > horizon) {
        throw HorizonError(n, horizon);
    }
    return values[static_cast<std::size_t>(n)];
}

Count RepSeries::max() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::int64_t counting_function(const IntegerSet& a, std::int64_t n) {
    require_within(a, n);
    const auto e = a.elements();
    return std::upper_bound(e.begin(), e.end(), n) - e.begin();
}

int chi(const IntegerSet& a, std::int64_t n) {
    return a.contains(n) ? 1 : 0;
}

RepSeries rep_series(const IntegerSet& a, int k, std::int64_t limit, conv::Method method) {
    if (k < 2) {
        throw ParameterError("rep_series needs k >= 2, got " + std::to_string(k));
    }
    if (limit < 0) {
        throw LengthError("rep_series limit must be nonnegative");
    }
    __int128 reach = static_cast<__int128>(a.bound()) * k;
    if (static_cast<__int128>(limit) > reach) {
        throw HorizonError(limit, static_cast<std::int64_t>(reach));
    }
    const auto ind = a.indicator(limit);
    const std::vector<Count> base(ind.begin(), ind.end());
    // First step squares base in place of copying it, which lets the transform route share work.
    std::vector<Count> acc = conv::multiply(base, base, static_cast<std::size_t>(limit), method);
    for (int step = 2; step < k; ++step) {
        acc = conv::multiply(acc, base, static_cast<std::size_t>(limit), method);
    }
    return RepSeries{k, limit, std::move(acc)};
}

std::vector<std::int64_t> delta(std::span<const std::int64_t> s, int l) {
    if (l < 1) {
        throw ParameterError("difference order must be >= 1");
    }
    if (s.size() <= static_cast<std::size_t>(l)) {
        throw LengthError("series of length " + std::to_string(s.size()) +
                          " too short for difference order " + std::to_string(l));
    }
    std::vector<std::int64_t> cur(s.begin(), s.end());
    for (int step = 0; step < l; ++step) {
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (__builtin_sub_overflow(cur[i + 1], cur[i], &cur[i])) {
                throw OverflowError("difference exceeds 64-bit signed range");
            }
        }
        cur.pop_back();
    }
    return cur;
}

std::int64_t block_count(const IntegerSet& a, std::int64_t n) {
    require_within(a, n);
    std::int64_t blocks = 0;
    std::int64_t prev = -2;
    for (const auto x : a.elements()) {
        if (x > n) {
            break;
        }
        if (x != prev + 1) {
            ++blocks;
        }
        prev = x;
    }
    return blocks;
}

std::vector<std::int64_t> weighted_window(const IntegerSet& a, const WeightVector& lam,
                                          std::int64_t limit) {
    require_within(a, limit);
    if (limit < 0) {
        return {};
    }
    const auto ind = a.indicator(limit);
    const auto w = lam.weights();
    std::vector<std::int64_t> out(static_cast<std::size_t>(limit) + 1, 0);
    for (std::size_t m = 0; m < out.size(); ++m) {
        __int128 s = 0;
        for (std::size_t i = 0; i < w.size() && i <= m; ++i) {
            s += ind[m - i] ? w[i] : 0;
        }
        out[m] = narrow_signed(s);
    }
    return out;
}

std::vector<std::int64_t> weighted_block_series(const IntegerSet& a, const WeightVector& lam,
                                                std::int64_t n) {
    const auto window = weighted_window(a, lam, n);
    std::vector<std::int64_t> out(window.size());
    std::int64_t running = 0;
    for (std::size_t m = 0; m < window.size(); ++m) {
        running += window[m] != 0 ? 1 : 0;
        out[m] = running;
    }
    return out;
}

std::int64_t weighted_block_count(const IntegerSet& a, const WeightVector& lam, std::int64_t n) {
    require_within(a, n);
    if (n < 0) {
        return 0;
    }
    return weighted_block_series(a, lam, n).back();
}

std::vector<std::int64_t> block_count_series(const IntegerSet& a, std::int64_t n) {
    require_within(a, n);
    if (n < 0) {
        return {};
    }
    const auto ind = a.indicator(n);
    std::vector<std::int64_t> out(ind.size());
    std::int64_t running = 0;
    for (std::size_t m = 0; m < ind.size(); ++m) {
        if (ind[m] && (m == 0 || !ind[m - 1])) {
            ++running;
        }
        out[m] = running;
    }
    return out;
}

std::int64_t weighted_rep(const WeightVector& lam, const RepSeries& rep, std::int64_t n) {
    if (rep.k != 2) {
        throw ParameterError("weighted_rep needs a k = 2 representation series");
    }
    if (n > rep.horizon) {
        throw HorizonError(n, rep.horizon);
    }
    const auto w = lam.weights();
    __int128 s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += static_cast<__int128>(w[i]) * rep.at(n - static_cast<std::int64_t>(i));
    }
    return narrow_signed(s);
}

std::vector<std::int64_t> weighted_rep_series(const WeightVector& lam, const RepSeries& rep) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(rep.horizon + 1));
    for (std::int64_t n = 0; n <= rep.horizon; ++n) {
        out.push_back(weighted_rep(lam, rep, n));
    }
    return out;
}

} // namespace addrep
