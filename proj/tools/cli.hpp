#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgca::cli {

/// Exit codes: 0 pass, 1 assertion or replay failure, 2 input error.
inline constexpr int kPass = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace pgca::cli
