#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// plumbing so tests can drive it in-process.

#include <ostream>

namespace cohstab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cohstab::cli
