#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addrep::cli {

inline constexpr const char* kToolVersion = "addrep 1.0.0";

// Exit codes.
inline constexpr int kOk = 0;              // success, or audited proxy holds
inline constexpr int kProxyViolated = 1;   // audited proxy fails, or replay mismatch
inline constexpr int kBadInput = 2;
inline constexpr int kSamplingFailure = 3;

// Runs one command line (without the program name). Diagnostics go to err;
// commands without --out write their primary output to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace addrep::cli
