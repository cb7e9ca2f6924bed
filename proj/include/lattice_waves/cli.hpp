#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lattice_waves::cli {

// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kValidation = 1,
  kUnsolvable = 2,
  kInternal = 3,
};

// Runs `lattice-waves <subcommand> ...`; args excludes the program name.
// Errors are reported on `err` as {"error": CODE, "detail": ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lattice_waves::cli
