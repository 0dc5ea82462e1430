#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace droop {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,  // bad config file, bad flags, unwritable output
    kExitModelError = 2,   // model-domain error at a requested operating point
};

/// Runs the command-line interface. args[0] is the program name. Tables go
/// to `out` (or to the file named by --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace droop
