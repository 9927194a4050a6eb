#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eccspec::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, InputError = 2 };

/// Runs one command line (args excludes the program name). Output goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eccspec::cli
