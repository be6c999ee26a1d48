#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuzzytop::cli {

/// Exit codes: 0 every check passed, 1 some check failed, 2 bad input or usage.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzytop::cli
