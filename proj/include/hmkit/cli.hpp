#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hmkit/report.hpp"

namespace hmkit {

struct ParsedArgs {
  std::optional<RunConfig> config;  // empty when the run should stop early
  int exit_code = kExitPass;        // meaningful only when config is empty
  std::string message;
};

/// Parses command-line arguments (without the program name).
ParsedArgs parse_args(const std::vector<std::string>& args);

/// Runs the selected suites. Throws BudgetExceeded from the fiber suite.
Report execute(const RunConfig& config);

/// Runs, writes the report to config.out (or `out`), and returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace hmkit
