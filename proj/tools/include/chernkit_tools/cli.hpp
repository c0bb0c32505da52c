#pragma once

#include <ostream>

namespace chernkit::tools {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInputError = 2 };

/// Entry point of the chernkit command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chernkit::tools
