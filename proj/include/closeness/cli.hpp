#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace closeness {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitPrecondition = 3,
  kExitAuditFailed = 4,
};

// Entry point of the `closeness` tool. args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace closeness
