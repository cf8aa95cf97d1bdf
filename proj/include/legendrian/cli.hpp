#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace legendrian {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitValidation = 2,
  kExitNonGeneric = 3,
  kExitPrecision = 4,
};

/// Runs the legmod command line. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace legendrian
