#pragma once

#include <iosfwd>
#include <stdexcept>

#include "gbi/cli/report.hpp"

namespace gbi {

// Invalid configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode { kExitPass = 0, kExitIdentityFailure = 1, kExitUsage = 2 };

// Checks suite names, degree, jobs and parameter names before any work.
// Returns the resolved suite list.
std::vector<std::string> validate(const RunConfig& config);

// Runs the selected suites. Progress lines go to `progress` when given.
VerificationReport run_suites(const RunConfig& config, std::ostream* progress = nullptr);

// Runs, renders and writes the report (to config.out, else `out`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Command-line entry point with the `verify`, `apply` and `suites` subcommands.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gbi
