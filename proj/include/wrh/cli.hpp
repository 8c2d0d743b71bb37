#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFindings = 2;

/// Runs one command line (without the program name). Exit code 0 on
/// success, 1 on usage or input errors, 2 when a check found failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wrh::cli
