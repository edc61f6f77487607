#pragma once

#include <string>

#include <json.hpp>

#include "addrep/audit.hpp"
#include "addrep/construct.hpp"

// JSON encodings of the report types (schema "v1").
//
// Integer quantities that can exceed 2^53 (observed counts, integer bounds,
// lhs_sup, seeds) are written as decimal strings. Real-valued thresholds and
// right-hand sides are JSON numbers.
namespace addrep::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";

Json to_json(const VerifiedBound& b);
Json to_json(const ConstructionReport& r);
Json to_json(const AuditReport& r);
Json to_json(const ExponentScan& s);

// Pretty-printed with a trailing newline; stable across runs.
std::string dump(const Json& j);

// Per-n TSV: n, lhs, rhs ("NA" where undefined).
std::string audit_tsv(const AuditReport& r);
// theta, ratio.
std::string scan_tsv(const ExponentScan& s);

// Shortest decimal that round-trips the double.
std::string format_real(double x);

} // namespace addrep::json
