#include "addrep/report_json.hpp"

#include <cstdio>
#include <string>

namespace addrep::json {

namespace {

Json params_object(const std::vector<std::pair<std::string, std::string>>& params) {
    Json out = Json::object();
    for (const auto& [k, v] : params) {
        out[k] = v;
    }
    return out;
}

Json weights(const WeightVector& lam) {
    Json out = Json::array();
    for (const auto w : lam.weights()) {
        out.push_back(w);
    }
    return out;
}

} // namespace

std::string format_real(double x) {
    char buf[32];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::stod(buf) == x) {
            break;
        }
    }
    return buf;
}

Json to_json(const VerifiedBound& b) {
    Json out;
    out["name"] = b.name;
    out["relation"] = to_string(b.relation);
    if (const auto* exact = std::get_if<std::int64_t>(&b.bound)) {
        out["bound"] = std::to_string(*exact);
    } else {
        out["bound"] = std::get<double>(b.bound);
    }
    out["observed"] = std::to_string(b.observed);
    out["holds"] = b.holds();
    return out;
}

Json to_json(const ConstructionReport& r) {
    Json out;
    out["schema"] = kSchemaVersion;
    out["kind"] = "construction_report";
    out["recipe"] = to_string(r.recipe);
    out["params"] = params_object(r.params);
    out["seed"] = r.seed ? Json(std::to_string(*r.seed)) : Json(nullptr);
    out["rng"] = r.rng_algorithm.empty() ? Json(nullptr) : Json(r.rng_algorithm);
    out["trials_used"] = r.trials_used;
    out["verified_bounds"] = Json::array();
    for (const auto& b : r.verified_bounds) {
        out["verified_bounds"].push_back(to_json(b));
    }
    out["all_bounds_hold"] = r.all_bounds_hold();
    out["notes"] = r.notes;
    return out;
}

Json to_json(const AuditReport& r) {
    Json out;
    out["schema"] = kSchemaVersion;
    out["kind"] = "audit_report";
    out["label"] = "proxy";
    out["theorem"] = to_string(r.theorem);
    out["lambda"] = weights(r.lam);
    out["horizon"] = r.horizon;
    out["theta"] = r.theta;
    out["constant"] = r.constant;
    out["direction"] = r.direction == Direction::lower ? "lhs_sup >= rhs_sup" : "lhs_sup <= rhs_sup";
    out["lhs_sup"] = std::to_string(r.lhs_sup);
    out["rhs_sup"] = r.rhs_sup;
    out["margin"] = r.margin;
    out["undefined_rhs"] = r.undefined_rhs;
    out["relative_tolerance"] = kProxyRelTol;
    out["holds"] = r.holds;
    out["params"] = params_object(r.params);
    out["extra_checks"] = Json::array();
    for (const auto& b : r.extra_checks) {
        out["extra_checks"].push_back(to_json(b));
    }
    out["notes"] = r.notes;
    return out;
}

Json to_json(const ExponentScan& s) {
    Json out;
    out["schema"] = kSchemaVersion;
    out["kind"] = "exponent_scan";
    out["label"] = "exploratory";
    out["theorem"] = to_string(Theorem::p1_scan);
    out["lambda"] = weights(s.lam);
    out["horizon"] = s.horizon;
    out["lhs_sup"] = std::to_string(s.lhs_sup);
    out["base_sup"] = s.base_sup;
    out["rows"] = Json::array();
    for (const auto& row : s.rows) {
        out["rows"].push_back({{"theta", row.theta}, {"ratio", row.ratio}});
    }
    return out;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

std::string audit_tsv(const AuditReport& r) {
    std::string out = "n\tlhs\trhs\n";
    for (std::size_t n = 0; n < r.lhs_series.size(); ++n) {
        out += std::to_string(n) + '\t' + std::to_string(r.lhs_series[n]) + '\t' +
               (r.rhs_series[n] ? format_real(*r.rhs_series[n]) : std::string("NA")) + '\n';
    }
    return out;
}

std::string scan_tsv(const ExponentScan& s) {
    std::string out = "theta\tratio\n";
    for (const auto& row : s.rows) {
        out += format_real(row.theta) + '\t' + format_real(row.ratio) + '\n';
    }
    return out;
}

} // namespace addrep::json
