#ifndef SOSMOD_TOOLS_CLI_HPP
#define SOSMOD_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "verify.hpp"

namespace sosmod::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitNotCovered = 3,
  kExitCapacity = 4,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Everything is written to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Same, with the verify sweep checking `families` instead of the defaults.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const std::vector<FamilyCheck>& families);

}  // namespace sosmod::cli

#endif  // SOSMOD_TOOLS_CLI_HPP
