#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace procco::cli {

enum class ExitCode : int {
  clean = 0,
  findings = 1,       // at least one error-severity finding
  parse_failure = 2,  // input could not be read or parsed
  usage = 3,
};

// Runs one procco subcommand. `args` excludes the program name. Results go to
// `out`, diagnostics and usage messages to `err`; `in` backs the "-" path.
ExitCode run(std::span<const std::string> args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace procco::cli
