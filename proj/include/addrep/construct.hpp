#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "addrep/errors.hpp"
#include "addrep/integer_set.hpp"

namespace addrep {

enum class Recipe { greedy_sidon, algebraic_sidon, theorem2, lemma1, theorem4, sumset };

const char* to_string(Recipe r);

enum class Relation { at_most, at_least, equal };

const char* to_string(Relation r);

// One checked bound. Integer bounds stay exact; real-valued thresholds are
// compared against the exact observed integer without tolerance.
struct VerifiedBound {
    std::string name;
    Relation relation = Relation::at_most;
    std::variant<std::int64_t, double> bound;
    std::int64_t observed = 0;

    bool holds() const;
};

struct ConstructionReport {
    Recipe recipe = Recipe::sumset;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<std::uint64_t> seed;
    std::string rng_algorithm;  // empty for deterministic recipes
    std::int64_t trials_used = 0;
    std::vector<VerifiedBound> verified_bounds;
    std::vector<std::string> notes;

    bool all_bounds_hold() const;
    const VerifiedBound& bound(const std::string& name) const;
};

struct Construction {
    IntegerSet set;
    ConstructionReport report;
};

// Outcome of a single rejection-sampling draw.
struct TrialDiagnostics {
    std::int64_t trial = 0;
    std::int64_t max_jump = 0;  // max_n |R_C(n) - R_C(n-1)|
    std::int64_t blocks = 0;    // B(C, lambda, M(d+1) - 1)
    bool accepted = false;
};

class SamplingFailure : public Error {
public:
    SamplingFailure(TrialDiagnostics best, std::int64_t trials, double jump_threshold,
                    double block_threshold);

    const TrialDiagnostics& best() const noexcept { return best_; }
    std::int64_t trials() const noexcept { return trials_; }
    double jump_threshold() const noexcept { return jump_threshold_; }
    double block_threshold() const noexcept { return block_threshold_; }

private:
    TrialDiagnostics best_;
    std::int64_t trials_;
    double jump_threshold_;
    double block_threshold_;
};

// {x + y : x in X, y in Y}; bound is X.bound + Y.bound.
IntegerSet sumset(const IntegerSet& x, const IntegerSet& y);

// 12 sqrt(M(d+1) ln(M(d+1))).
double lemma1_jump_threshold(std::int64_t m, std::int64_t d);
// M / 2^(d+2).
double lemma1_block_threshold(std::int64_t m, std::int64_t d);
// 48 d sum|lambda_i| (M(d+1))^(3/2) (ln M(d+1))^(1/2).
double theorem4_finite_bound(std::int64_t m, const WeightVector& lam);

// T = prune_gaps(S, (N+1)(d+1)); A = union of T + j(d+1), j = 0..N.
Construction theorem2_construct(const IntegerSet& sidon, std::int64_t n, std::int64_t d,
                                const std::string& substrate = "unspecified");

// One draw of the random subset of [0, M(d+1) - 1] for (seed, trial).
IntegerSet lemma1_draw(std::int64_t m, std::int64_t d, std::uint64_t seed, std::int64_t trial);

// Both acceptance quantities for a candidate set, computed from scratch.
TrialDiagnostics lemma1_evaluate(const IntegerSet& c, std::int64_t m, const WeightVector& lam);

// Rejection sampling until both acceptance conditions hold; the lowest
// accepting trial index wins.
Construction lemma1_sample(std::int64_t m, std::int64_t d, const WeightVector& lam,
                           std::uint64_t seed, std::int64_t max_trials);

// A = C_M + S_M with S_M = prune_gaps(S, 2M(d+1)). Requires sum lambda_i = 0.
Construction theorem4_construct(const IntegerSet& sidon, std::int64_t m, std::int64_t d,
                                const WeightVector& lam, std::uint64_t seed,
                                std::int64_t max_trials = 100,
                                const std::string& substrate = "unspecified");

// max over all n of |sum_i lambda_i R_A(n - i)| for the finite set A.
std::int64_t max_abs_weighted_rep(const IntegerSet& a, const WeightVector& lam);

} // namespace addrep
