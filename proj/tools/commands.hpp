#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divpow/rep_hilb.hpp"

namespace divpow::cli {

/// Exit statuses of the divpow tool.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name. Output depends
/// only on (args, stdin contents).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Reads {n, m, matrices, v?} with entries as "p/q" strings or integers.
Triple parse_triple_json(const std::string& text, bool& has_vector);

std::string hc_to_json(const HCPoint& point, const Triple& t, bool has_vector);

}  // namespace divpow::cli
