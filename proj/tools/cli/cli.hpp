#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arithcorr::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kConjectureViolated = 1,  // a finding, not a failure
  kUsage = 2,
  kInvalidInput = 3,
  kOracleMismatch = 4,
};

/// Runs one command line. args excludes the program name, e.g.
/// {"acorr", "--seq", "0011101", "--all"}. Reports go to out (or to the
/// --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arithcorr::cli
