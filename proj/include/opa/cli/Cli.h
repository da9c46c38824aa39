#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opa::cli {

enum ExitCode : int { kOk = 0, kNonMember = 1, kError = 2 };

/// Runs the `opa` command line. `args` excludes the program name. Output
/// goes to the given streams so the commands can be driven in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opa::cli
