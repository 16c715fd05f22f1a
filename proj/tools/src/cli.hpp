#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbramsey::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kDomainError = 2,
    kStrictHypothesis = 3,
    kAssemblyError = 4,
    kParseError = 5,
    kBudgetExceeded = 6,
};

/// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnv = "CBRAMSEY_THREADS";

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbramsey::cli
