#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dedekind::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 invalid input or hypothesis.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedekind::cli
