#include "addrep/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <string>

#include "addrep/philox.hpp"
#include "addrep/seqcore.hpp"
#include "addrep/sidon.hpp"

namespace addrep {

namespace {

std::string join(std::span<const std::int64_t> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

void require_sidon(const IntegerSet& s) {
    const auto cert = is_sidon(s);
    if (!cert.is_sidon) {
        throw ParameterError("substrate is not a Sidon set (max R = " + std::to_string(cert.max_rep) +
                             ")");
    }
}

// |S| / sqrt(bound): finite stand-in for the substrate's density.
std::string density(const IntegerSet& s) {
    if (s.bound() == 0) {
        return "0";
    }
    return format_real(static_cast<double>(s.size()) / std::sqrt(static_cast<double>(s.bound())));
}

} // namespace

const char* to_string(Recipe r) {
    switch (r) {
    case Recipe::greedy_sidon: return "greedy-sidon";
    case Recipe::algebraic_sidon: return "algebraic-sidon";
    case Recipe::theorem2: return "theorem2";
    case Recipe::lemma1: return "lemma1";
    case Recipe::theorem4: return "theorem4";
    case Recipe::sumset: return "sumset";
    }
    return "?";
}

const char* to_string(Relation r) {
    switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::equal: return "==";
    }
    return "?";
}

bool VerifiedBound::holds() const {
    return std::visit(
        [&](auto b) {
            const auto obs = static_cast<decltype(b)>(observed);
            switch (relation) {
            case Relation::at_most: return obs <= b;
            case Relation::at_least: return obs >= b;
            case Relation::equal: return obs == b;
            }
            return false;
        },
        bound);
}

bool ConstructionReport::all_bounds_hold() const {
    return std::all_of(verified_bounds.begin(), verified_bounds.end(),
                       [](const auto& b) { return b.holds(); });
}

const VerifiedBound& ConstructionReport::bound(const std::string& name) const {
    for (const auto& b : verified_bounds) {
        if (b.name == name) {
            return b;
        }
    }
    throw ParameterError("report has no bound named " + name);
}

SamplingFailure::SamplingFailure(TrialDiagnostics best, std::int64_t trials, double jump_threshold,
                                 double block_threshold)
    : Error("sampling failed after " + std::to_string(trials) + " trials; best trial " +
            std::to_string(best.trial) + " had max jump " + std::to_string(best.max_jump) +
            " (limit " + format_real(jump_threshold) + ") and block count " +
            std::to_string(best.blocks) + " (need " + format_real(block_threshold) + ")"),
      best_(best),
      trials_(trials),
      jump_threshold_(jump_threshold),
      block_threshold_(block_threshold) {}

IntegerSet sumset(const IntegerSet& x, const IntegerSet& y) {
    std::vector<std::int64_t> out;
    out.reserve(x.size() * y.size());
    for (const auto a : x.elements()) {
        for (const auto b : y.elements()) {
            out.push_back(a + b);
        }
    }
    return IntegerSet::from_unsorted(std::move(out), x.bound() + y.bound());
}

double lemma1_jump_threshold(std::int64_t m, std::int64_t d) {
    const double len = static_cast<double>(m) * static_cast<double>(d + 1);
    return 12.0 * std::sqrt(len * std::log(len));
}

double lemma1_block_threshold(std::int64_t m, std::int64_t d) {
    return std::ldexp(static_cast<double>(m), -static_cast<int>(d + 2));
}

double theorem4_finite_bound(std::int64_t m, const WeightVector& lam) {
    const double d = static_cast<double>(lam.degree());
    const double len = static_cast<double>(m) * (d + 1.0);
    return 48.0 * d * static_cast<double>(lam.abs_sum()) * std::pow(len, 1.5) *
           std::sqrt(std::log(len));
}

std::int64_t max_abs_weighted_rep(const IntegerSet& a, const WeightVector& lam) {
    const auto rep = rep_series(a, 2, 2 * a.bound());
    const auto d = static_cast<std::int64_t>(lam.degree());
    std::int64_t best = 0;
    // R vanishes past 2 * bound, so L(n) does past 2 * bound + d.
    for (std::int64_t n = 0; n <= rep.horizon + d; ++n) {
        __int128 s = 0;
        for (std::size_t i = 0; i <= lam.degree(); ++i) {
            const std::int64_t at = n - static_cast<std::int64_t>(i);
            if (at <= rep.horizon) {
                s += static_cast<__int128>(lam[i]) * rep.at(at);
            }
        }
        const __int128 mag = s < 0 ? -s : s;
        if (mag > std::numeric_limits<std::int64_t>::max()) {
            throw OverflowError("weighted representation sum exceeds 64-bit range");
        }
        best = std::max(best, static_cast<std::int64_t>(mag));
    }
    return best;
}

Construction theorem2_construct(const IntegerSet& sidon, std::int64_t n, std::int64_t d,
                                const std::string& substrate) {
    if (n < 1 || d < 0) {
        throw ParameterError("theorem2 needs N >= 1 and d >= 0");
    }
    require_sidon(sidon);
    const std::int64_t threshold = (n + 1) * (d + 1);
    const auto t = prune_gaps(sidon, threshold);
    if (t.empty()) {
        throw DegenerateConstruction("pruning at gap " + std::to_string(threshold) +
                                     " left no elements; the Sidon substrate is too small or dense");
    }
    std::vector<std::int64_t> elems;
    elems.reserve(t.size() * static_cast<std::size_t>(n + 1));
    for (std::int64_t j = 0; j <= n; ++j) {
        for (const auto x : t.elements()) {
            elems.push_back(x + j * (d + 1));
        }
    }
    auto a = IntegerSet::from_unsorted(std::move(elems), t.bound() + n * (d + 1));

    ConstructionReport report;
    report.recipe = Recipe::theorem2;
    report.params = {{"N", std::to_string(n)},
                     {"d", std::to_string(d)},
                     {"prune_threshold", std::to_string(threshold)},
                     {"substrate", substrate},
                     {"substrate_size", std::to_string(sidon.size())},
                     {"substrate_density", density(sidon)},
                     {"pruned_size", std::to_string(t.size())},
                     {"set_size", std::to_string(a.size())}};
    const auto rep = rep_series(a, 2, 2 * a.bound());
    report.verified_bounds.push_back({"max_rep", Relation::at_most,
                                      std::int64_t{2 * (n + 1) * (n + 1)},
                                      static_cast<std::int64_t>(rep.max())});
    if (const auto gap = a.min_gap()) {
        report.verified_bounds.push_back({"min_gap", Relation::at_least, std::int64_t{d + 1}, *gap});
    }
    report.notes.push_back(
        "the limsup density conclusion is not finitely checkable; substrate_density is reported instead");
    return {std::move(a), std::move(report)};
}

IntegerSet lemma1_draw(std::int64_t m, std::int64_t d, std::uint64_t seed, std::int64_t trial) {
    const std::int64_t len = m * (d + 1);
    CoinStream coins(seed, static_cast<std::uint64_t>(trial));
    std::vector<std::int64_t> elems;
    for (std::int64_t x = 0; x < len; ++x) {
        if (coins.flip(static_cast<std::uint64_t>(x))) {
            elems.push_back(x);
        }
    }
    return IntegerSet(std::move(elems), len - 1);
}

TrialDiagnostics lemma1_evaluate(const IntegerSet& c, std::int64_t m, const WeightVector& lam) {
    const auto d = static_cast<std::int64_t>(lam.degree());
    const std::int64_t len = m * (d + 1);
    const auto rep = rep_series(c, 2, 2 * len - 2);
    TrialDiagnostics diag;
    for (std::int64_t n = 0; n <= 2 * len - 2; ++n) {
        const auto hi = static_cast<std::int64_t>(rep.at(n));
        const auto lo = static_cast<std::int64_t>(rep.at(n - 1));
        diag.max_jump = std::max(diag.max_jump, hi > lo ? hi - lo : lo - hi);
    }
    diag.blocks = weighted_block_count(c, lam, len - 1);
    diag.accepted = static_cast<double>(diag.max_jump) <= lemma1_jump_threshold(m, d) &&
                    static_cast<double>(diag.blocks) >= lemma1_block_threshold(m, d);
    return diag;
}

Construction lemma1_sample(std::int64_t m, std::int64_t d, const WeightVector& lam,
                           std::uint64_t seed, std::int64_t max_trials) {
    if (d < 0 || static_cast<std::size_t>(d) != lam.degree()) {
        throw ParameterError("d must equal the weight vector degree (" +
                             std::to_string(lam.degree()) + ")");
    }
    if (m < 1 || lemma1_block_threshold(m, d) < 1.0) {
        throw ParameterError("lemma1 needs M / 2^(d+2) >= 1");
    }
    if (max_trials < 1) {
        throw ParameterError("max_trials must be >= 1");
    }
    const double jump_limit = lemma1_jump_threshold(m, d);
    const double block_limit = lemma1_block_threshold(m, d);

    // Ranks a rejected trial by how close it came on its worse condition.
    const auto slack = [&](const TrialDiagnostics& t) {
        return std::min((jump_limit - static_cast<double>(t.max_jump)) / jump_limit,
                        (static_cast<double>(t.blocks) - block_limit) / block_limit);
    };

    std::optional<TrialDiagnostics> best;
    for (std::int64_t trial = 0; trial < max_trials; ++trial) {
        auto c = lemma1_draw(m, d, seed, trial);
        const auto diag = [&] {
            auto t = lemma1_evaluate(c, m, lam);
            t.trial = trial;
            return t;
        }();
        if (!diag.accepted) {
            if (!best || slack(diag) > slack(*best)) {
                best = diag;
            }
            continue;
        }
        const std::int64_t len = m * (d + 1);
        // C is finite, so widening its bound only adds known non-members.
        const IntegerSet widened(std::vector<std::int64_t>(c.elements().begin(), c.elements().end()),
                                 2 * len - 2);

        ConstructionReport report;
        report.recipe = Recipe::lemma1;
        report.params = {{"M", std::to_string(m)},
                         {"d", std::to_string(d)},
                         {"lambda", join(lam.weights())},
                         {"max_trials", std::to_string(max_trials)},
                         {"interval", "[0," + std::to_string(len - 1) + "]"},
                         {"set_size", std::to_string(c.size())}};
        report.seed = seed;
        report.rng_algorithm = Philox4x32::kAlgorithm;
        report.trials_used = trial + 1;
        report.verified_bounds.push_back(
            {"max_rep_jump", Relation::at_most, jump_limit, diag.max_jump});
        report.verified_bounds.push_back(
            {"weighted_blocks_at_" + std::to_string(len - 1), Relation::at_least, block_limit,
             diag.blocks});
        report.verified_bounds.push_back(
            {"weighted_blocks_at_" + std::to_string(2 * len - 2), Relation::at_least, block_limit,
             weighted_block_count(widened, lam, 2 * len - 2)});
        report.notes.push_back("block condition is enforced at M(d+1)-1; the value at 2M(d+1)-2 is "
                               "recorded for comparison");
        return {std::move(c), std::move(report)};
    }
    throw SamplingFailure(*best, max_trials, jump_limit, block_limit);
}

Construction theorem4_construct(const IntegerSet& sidon, std::int64_t m, std::int64_t d,
                                const WeightVector& lam, std::uint64_t seed,
                                std::int64_t max_trials, const std::string& substrate) {
    if (lam.sum() != 0) {
        throw HypothesisError("theorem4 needs sum of weights = 0, got " + std::to_string(lam.sum()));
    }
    if (d < 0 || static_cast<std::size_t>(d) != lam.degree()) {
        throw ParameterError("d must equal the weight vector degree (" +
                             std::to_string(lam.degree()) + ")");
    }
    require_sidon(sidon);
    const std::int64_t threshold = 2 * m * (d + 1);
    const auto pruned = prune_gaps(sidon, threshold);
    if (pruned.empty()) {
        throw DegenerateConstruction("pruning at gap " + std::to_string(threshold) +
                                     " left no elements; the Sidon substrate is too small or dense");
    }
    auto lemma = lemma1_sample(m, d, lam, seed, max_trials);
    const auto& c = lemma.set;
    auto a = sumset(c, pruned);

    ConstructionReport report;
    report.recipe = Recipe::theorem4;
    report.params = {{"M", std::to_string(m)},
                     {"d", std::to_string(d)},
                     {"lambda", join(lam.weights())},
                     {"max_trials", std::to_string(max_trials)},
                     {"prune_threshold", std::to_string(threshold)},
                     {"substrate", substrate},
                     {"substrate_size", std::to_string(sidon.size())},
                     {"substrate_density", density(sidon)},
                     {"pruned_size", std::to_string(pruned.size())},
                     {"lemma_set_size", std::to_string(c.size())},
                     {"set_size", std::to_string(a.size())}};
    report.seed = seed;
    report.rng_algorithm = Philox4x32::kAlgorithm;
    report.trials_used = lemma.report.trials_used;
    for (const auto& b : lemma.report.verified_bounds) {
        auto copy = b;
        copy.name = "lemma1." + b.name;
        report.verified_bounds.push_back(std::move(copy));
    }
    report.verified_bounds.push_back({"max_abs_weighted_rep", Relation::at_most,
                                      theorem4_finite_bound(m, lam), max_abs_weighted_rep(a, lam)});
    report.verified_bounds.push_back(
        {"translate_disjointness", Relation::equal,
         static_cast<std::int64_t>(c.size() * pruned.size()), static_cast<std::int64_t>(a.size())});
    report.notes.push_back("the lower bound on B(A, lambda, n) printed with horizon (M+1)-1 is read "
                           "as M(d+1)-1");
    return {std::move(a), std::move(report)};
}

} // namespace addrep
