#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace exprings::cli {

enum ExitCode { kOk = 0, kDomain = 1, kBudget = 2, kInput = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text of `demo` (or its JSON form).  A seed appends a section of random samples.
std::string demo(bool json, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace exprings::cli
