#include "addrep/sidon.hpp"

#include <string>
#include <vector>

#include "addrep/errors.hpp"
#include "addrep/seqcore.hpp"

namespace addrep {

IntegerSet greedy_sidon(std::int64_t count) {
    if (count < 1) {
        throw ParameterError("greedy_sidon needs count >= 1");
    }
    std::vector<std::int64_t> terms{kGreedySidonStart};
    // used[s] marks every pairwise sum a + b (a <= b) of accepted terms.
    std::vector<bool> used(static_cast<std::size_t>(2 * kGreedySidonStart + 1), false);
    used[static_cast<std::size_t>(2 * kGreedySidonStart)] = true;
    std::int64_t candidate = kGreedySidonStart;
    while (static_cast<std::int64_t>(terms.size()) < count) {
        ++candidate;
        if (used.size() <= static_cast<std::size_t>(2 * candidate)) {
            used.resize(static_cast<std::size_t>(4 * candidate + 2), false);
        }
        bool ok = !used[static_cast<std::size_t>(2 * candidate)];
        for (std::size_t i = 0; ok && i < terms.size(); ++i) {
            ok = !used[static_cast<std::size_t>(candidate + terms[i])];
        }
        if (!ok) {
            continue;
        }
        for (const auto t : terms) {
            used[static_cast<std::size_t>(candidate + t)] = true;
        }
        used[static_cast<std::size_t>(2 * candidate)] = true;
        terms.push_back(candidate);
    }
    return IntegerSet(std::move(terms));
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

IntegerSet algebraic_sidon(std::int64_t p) {
    if (!is_prime(p)) {
        throw ParameterError("algebraic_sidon needs a prime, got " + std::to_string(p));
    }
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(p));
    for (std::int64_t i = 0; i < p; ++i) {
        out.push_back(2 * p * i + (i * i) % p);
    }
    // 2 p i dominates the residue, so the sequence is already increasing.
    return IntegerSet(std::move(out));
}

SidonCertificate is_sidon(const IntegerSet& a) {
    const std::int64_t horizon = 2 * a.bound();
    const auto rep = rep_series(a, 2, horizon);
    const auto max_rep = rep.max();
    return {horizon, max_rep, max_rep <= 2};
}

IntegerSet prune_gaps(const IntegerSet& s, std::int64_t threshold) {
    if (threshold < 0) {
        throw ParameterError("prune threshold must be nonnegative");
    }
    const auto e = s.elements();
    std::vector<bool> drop(e.size(), false);
    // Removal set is the union over all close pairs, not just neighbours.
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size() && e[j] - e[i] <= threshold; ++j) {
            drop[i] = true;
            drop[j] = true;
        }
    }
    std::vector<std::int64_t> kept;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!drop[i]) {
            kept.push_back(e[i]);
        }
    }
    return IntegerSet(std::move(kept), s.bound());
}

} // namespace addrep
