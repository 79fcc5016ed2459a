#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chronomine::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 oracle mismatch, 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chronomine::cli
