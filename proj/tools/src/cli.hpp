#pragma once

#include <string>
#include <vector>

#include <mcg/report.hpp>

namespace mcg::cli {

struct DispatchResult {
  int exit_code = 0;
  Report report;       // unset for usage errors and help
  std::string output;  // rendered report or help text, for standard output
  std::string error;   // diagnostics, for standard error
};

// Runs one command. args excludes the program name. Exit code 0 when every
// check passed, 1 when a check failed, 2 for usage errors.
DispatchResult dispatch(const std::vector<std::string>& args);

}  // namespace mcg::cli
