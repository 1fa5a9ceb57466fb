#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uberdh {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitTorsion = 2,
  kExitSizeCap = 3,
  kExitVerification = 4,
  kExitInternal = 5,
};

/// Command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace uberdh
