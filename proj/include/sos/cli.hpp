#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sos::cli {

/// Runs one of the subcommands run, experiment, preset or sweep.
/// `args` excludes the program name. Returns the process exit status; on
/// failure a single diagnostic line is written to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sos::cli
