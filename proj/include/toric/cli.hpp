#pragma once

// The toric-linsys command line, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kGenericity = 2,
  kInconclusive = 3,
  kVerificationFailed = 4,
};

/// args excludes the program name. Prints one JSON document on `out`,
/// human-readable notes on `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
