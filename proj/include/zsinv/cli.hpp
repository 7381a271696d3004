#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zsinv {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitUndetermined = 2, kExitMismatch = 3 };

/// Entry point of the zsinv tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsinv
