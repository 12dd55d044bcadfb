#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace edgeplace {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // usage or configuration error
  kExitInfeasible = 2,  // no placement satisfies the constraints
  kExitIo = 3,
};

// Entry point of the `edgeplace` tool. `args` excludes the program name.
// Subcommands: gen-trace, run, sweep, validate.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeplace
