#include "addrep/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "addrep/errors.hpp"
#include "addrep/seqcore.hpp"

namespace addrep {

namespace {

struct Sides {
    std::vector<std::int64_t> lhs;   // |L(n)|
    std::vector<std::int64_t> base;  // B(A, lambda, n)
};

Sides tabulate(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon) {
    if (horizon < 0) {
        throw ParameterError("audit horizon must be nonnegative");
    }
    if (horizon > a.bound()) {
        throw HorizonError(horizon, a.bound());
    }
    const auto rep = rep_series(a, 2, horizon);
    Sides s;
    s.lhs = weighted_rep_series(lam, rep);
    for (auto& v : s.lhs) {
        v = v < 0 ? -v : v;
    }
    s.base = weighted_block_series(a, lam, horizon);
    return s;
}

// Fills every derived field from the two sides. `rhs_at(b, n)` gets
// B(A, lambda, n) and n >= 1 and returns nullopt where undefined.
AuditReport assemble(Theorem theorem, const WeightVector& lam, std::int64_t horizon, double theta,
                     double constant, Direction direction, const Sides& sides,
                     const std::function<std::optional<double>(std::int64_t, std::int64_t)>& rhs_at) {
    AuditReport r;
    r.theorem = theorem;
    r.lam = lam;
    r.horizon = horizon;
    r.theta = theta;
    r.constant = constant;
    r.direction = direction;
    r.lhs_series = sides.lhs;
    r.rhs_series.resize(sides.lhs.size());
    for (std::size_t n = 0; n < sides.lhs.size(); ++n) {
        r.lhs_sup = std::max(r.lhs_sup, sides.lhs[n]);
        if (n == 0) {
            continue;  // B / sqrt(n) has no value at n = 0
        }
        r.rhs_series[n] = rhs_at(sides.base[n], static_cast<std::int64_t>(n));
        if (r.rhs_series[n]) {
            r.rhs_sup = std::max(r.rhs_sup, *r.rhs_series[n]);
        }
    }
    r.undefined_rhs = std::count(r.rhs_series.begin(), r.rhs_series.end(), std::nullopt);
    r.margin = static_cast<double>(r.lhs_sup) - r.rhs_sup;
    r.holds = proxy_holds(direction, static_cast<double>(r.lhs_sup), r.rhs_sup);
    r.notes.push_back("finite-window proxy: running maxima over [0, horizon], not a limsup");
    return r;
}

// c * (B / sqrt n)^theta, with 0 where B = 0.
auto power_rhs(double constant, double theta) {
    return [constant, theta](std::int64_t b, std::int64_t n) -> std::optional<double> {
        if (b == 0) {
            return 0.0;
        }
        return constant * std::pow(static_cast<double>(b) / std::sqrt(static_cast<double>(n)), theta);
    };
}

std::string join(std::span<const std::int64_t> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
}

} // namespace

const char* to_string(Theorem t) {
    switch (t) {
    case Theorem::t1: return "T1";
    case Theorem::t2: return "T2";
    case Theorem::t3: return "T3";
    case Theorem::t4: return "T4";
    case Theorem::p1_scan: return "P1-scan";
    }
    return "?";
}

bool proxy_holds(Direction direction, double lhs, double rhs) {
    const double slack = kProxyRelTol * std::max(std::abs(lhs), std::abs(rhs));
    return direction == Direction::lower ? lhs >= rhs - slack : lhs <= rhs + slack;
}

AuditReport audit_theorem1(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon) {
    const double d1 = static_cast<double>(lam.degree() + 1);
    const double c = static_cast<double>(std::abs(lam.sum())) / (2.0 * d1 * d1);
    const auto sides = tabulate(a, lam, horizon);
    auto r = assemble(Theorem::t1, lam, horizon, 2.0, c, Direction::lower, sides, power_rhs(c, 2.0));
    r.params = {{"lambda", join(lam.weights())}};
    return r;
}

AuditReport audit_theorem2_bound(const IntegerSet& a, const WeightVector& lam, std::int64_t n_param,
                                 std::int64_t horizon) {
    if (lam.sum() <= 0) {
        throw HypothesisError("theorem 2 audit needs sum of weights > 0, got " +
                              std::to_string(lam.sum()));
    }
    const double c = 4.0 * static_cast<double>(lam.abs_sum());
    const auto sides = tabulate(a, lam, horizon);
    auto r = assemble(Theorem::t2, lam, horizon, 2.0, c, Direction::upper, sides, power_rhs(c, 2.0));
    r.params = {{"lambda", join(lam.weights())}, {"N", std::to_string(n_param)}};
    if (n_param >= 1) {
        r.extra_checks.push_back({"construction_bound", Relation::at_most,
                                  std::int64_t{2 * lam.abs_sum() * (n_param + 1) * (n_param + 1)},
                                  r.lhs_sup});
    }
    return r;
}

AuditReport audit_theorem3(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon) {
    if (lam.sum() != 0) {
        throw HypothesisError("theorem 3 audit needs sum of weights = 0, got " +
                              std::to_string(lam.sum()));
    }
    const double c = std::numbers::sqrt2 /
                     (std::exp(2.0) * static_cast<double>(lam.abs_sum()));
    const auto sides = tabulate(a, lam, horizon);
    auto r = assemble(Theorem::t3, lam, horizon, 1.0, c, Direction::lower, sides, power_rhs(c, 1.0));
    r.params = {{"lambda", join(lam.weights())}};
    return r;
}

AuditReport audit_theorem4_bound(const IntegerSet& a, const WeightVector& lam, std::int64_t m,
                                 std::int64_t d, std::int64_t horizon) {
    if (lam.sum() != 0) {
        throw HypothesisError("theorem 4 audit needs sum of weights = 0, got " +
                              std::to_string(lam.sum()));
    }
    if (d < 0 || static_cast<std::size_t>(d) != lam.degree()) {
        throw ParameterError("d must equal the weight vector degree (" +
                             std::to_string(lam.degree()) + ")");
    }
    const double dd = static_cast<double>(d);
    const double c = 48.0 * std::pow(dd + 1.0, 4.0) * std::exp2(3.0 * dd + 7.5) *
                     static_cast<double>(lam.abs_sum());
    const auto rhs = [c](std::int64_t b, std::int64_t n) -> std::optional<double> {
        const double base = static_cast<double>(b) / std::sqrt(static_cast<double>(n));
        if (base <= 1.0) {
            return std::nullopt;
        }
        return c * std::pow(base, 1.5) * std::sqrt(std::log(base));
    };
    const auto sides = tabulate(a, lam, horizon);
    auto r = assemble(Theorem::t4, lam, horizon, 1.5, c, Direction::upper, sides, rhs);
    r.params = {{"lambda", join(lam.weights())}, {"M", std::to_string(m)}, {"d", std::to_string(d)}};
    if (m >= 1) {
        r.extra_checks.push_back(
            {"construction_bound", Relation::at_most, theorem4_finite_bound(m, lam), r.lhs_sup});
    }
    r.notes.push_back("rhs is undefined where B(A, lambda, n) / sqrt(n) <= 1; those n are skipped");
    return r;
}

double parseval_energy(const IntegerSet& a, const WeightVector& lam, std::int64_t n) {
    if (n < 1) {
        throw ParameterError("parseval_energy needs N >= 1");
    }
    if (a.empty()) {
        return 0.0;
    }
    const auto w = lam.weights();
    const std::int64_t top = a.max_element() + static_cast<std::int64_t>(lam.degree());
    const auto ind = a.indicator(a.max_element());
    const double scale = -2.0 / static_cast<double>(n);
    long double total = 0.0L;
    for (std::int64_t m = 0; m <= top; ++m) {
        __int128 s = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const std::int64_t at = m - static_cast<std::int64_t>(i);
            if (at >= 0 && at < static_cast<std::int64_t>(ind.size()) && ind[static_cast<std::size_t>(at)]) {
                s += w[i];
            }
        }
        if (s != 0) {
            const long double sq = static_cast<long double>(s) * static_cast<long double>(s);
            total += sq * std::exp(static_cast<long double>(scale) * static_cast<long double>(m));
        }
    }
    return static_cast<double>(total);
}

double geometric_weight_sum(std::int64_t n) {
    if (n < 1) {
        throw ParameterError("geometric_weight_sum needs N >= 1");
    }
    return 1.0 / -std::expm1(-2.0 / static_cast<double>(n));
}

ExponentScan exponent_scan(const IntegerSet& a, const WeightVector& lam, std::int64_t horizon,
                           std::span<const double> thetas) {
    if (lam.sum() != 0) {
        throw HypothesisError("exponent scan needs sum of weights = 0, got " +
                              std::to_string(lam.sum()));
    }
    for (const double t : thetas) {
        if (!(t >= 0.0 && t <= 3.0)) {
            throw ParameterError("theta values must lie in [0, 3]");
        }
    }
    const auto sides = tabulate(a, lam, horizon);
    ExponentScan scan;
    scan.lam = lam;
    scan.horizon = horizon;
    scan.lhs_sup = sides.lhs.empty() ? 0 : *std::max_element(sides.lhs.begin(), sides.lhs.end());
    for (std::int64_t n = 1; n <= horizon; ++n) {
        scan.base_sup = std::max(scan.base_sup, static_cast<double>(sides.base[static_cast<std::size_t>(n)]) /
                                                    std::sqrt(static_cast<double>(n)));
    }
    if (scan.base_sup == 0.0) {
        throw DegenerateInput("B(A, lambda, n) vanishes on the whole window; the scan has no base");
    }
    for (const double t : thetas) {
        scan.rows.push_back({t, static_cast<double>(scan.lhs_sup) / std::pow(scan.base_sup, t)});
    }
    return scan;
}

} // namespace addrep
