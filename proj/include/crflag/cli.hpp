#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crflag {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,      // bad flags or a spec that does not parse
  kExitInvalid = 2,    // the spec parses but names an invalid diagram or request
  kExitViolation = 3,  // a sweep or oracle found an inconsistency
};

struct SweepReport;

/// kExitViolation when the report lists any mismatch, kExitOk otherwise.
int sweep_exit_code(const SweepReport& r);

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crflag
