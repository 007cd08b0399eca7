#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersat::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // I/O and other runtime errors
  kUsage = 2,       // bad flags, unknown names, invalid assignments
  kParseError = 3,  // malformed DIMACS input
  kGuardrail = 4,   // documented size limits
  kHypothesis = 5,  // a verification premise was not met
  kFalsified = 6,   // a verified claim failed
};

/// Environment variable naming the directory for generated files and relative
/// output paths.
inline constexpr const char* kOutDirEnv = "HYPERSAT_OUT_DIR";

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypersat::cli
