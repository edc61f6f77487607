#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addrep/construct.hpp"
#include "addrep/integer_set.hpp"

namespace addrep {

enum class Theorem { t1, t2, t3, t4, p1_scan };

const char* to_string(Theorem t);

// lower: the audited inequality reads lhs >= rhs; upper: lhs <= rhs.
enum class Direction { lower, upper };

// Relative tolerance for every real-valued proxy comparison.
inline constexpr double kProxyRelTol = 1e-9;

// Finite-window proxy of a limsup inequality
//   limsup |L(n)|  (>= or <=)  limsup c * (B(A, lambda, n) / sqrt n)^theta [* extra]
// where L(n) = sum_i lambda_i R_A(n - i). Both sides are tabulated on
// [0, horizon] and compared through their running maxima. Nothing here is
// a claim about the limsup itself.
struct AuditReport {
    Theorem theorem = Theorem::t1;
    WeightVector lam{{1}};
    std::int64_t horizon = 0;
    double theta = 0.0;
    double constant = 0.0;
    Direction direction = Direction::lower;

    std::vector<std::int64_t> lhs_series;               // |L(n)|, n = 0..horizon
    std::vector<std::optional<double>> rhs_series;      // nullopt where undefined
    std::int64_t lhs_sup = 0;
    double rhs_sup = 0.0;
    double margin = 0.0;                                // lhs_sup - rhs_sup
    std::int64_t undefined_rhs = 0;
    bool holds = false;

    std::vector<std::pair<std::string, std::string>> params;
    std::vector<VerifiedBound> extra_checks;            // exact finite bounds
    std::vector<std::string> notes;
};

// Comparison used for `holds`, with kProxyRelTol slack on the real side.
bool proxy_holds(Direction direction, double lhs, double rhs);

AuditReport audit_theorem1(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon);

// Requires sum lambda_i > 0.
AuditReport audit_theorem2_bound(const IntegerSet& a, const WeightVector& lam, std::int64_t n_param,
                                 std::int64_t horizon);

// Requires sum lambda_i = 0.
AuditReport audit_theorem3(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon);

// Requires sum lambda_i = 0 and d = degree of lambda.
AuditReport audit_theorem4_bound(const IntegerSet& a, const WeightVector& lam, std::int64_t m,
                                 std::int64_t d, std::int64_t horizon);

// I(N) = sum_{n >= 0} (sum_i lambda_i chi_A(n - i))^2 e^{-2n/N}, summed over
// the finite support of A (the set is read as having no elements past its
// bound). At least e^{-2} B(A, lambda, N) whenever N <= bound.
double parseval_energy(const IntegerSet& a, const WeightVector& lam, std::int64_t n);

// sum_{n >= 0} e^{-2n/N} = 1 / (1 - e^{-2/N}).
double geometric_weight_sum(std::int64_t n);

struct ScanRow {
    double theta = 0.0;
    double ratio = 0.0;
};

struct ExponentScan {
    WeightVector lam{{1}};
    std::int64_t horizon = 0;
    std::int64_t lhs_sup = 0;
    double base_sup = 0.0;  // max_{1 <= n <= horizon} B(A, lambda, n) / sqrt n
    std::vector<ScanRow> rows;
};

// ratio(theta) = lhs_sup / base_sup^theta. Exploratory only.
ExponentScan exponent_scan(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon,
                           std::span<const double> thetas);

} // namespace addrep
