#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ripscrush::cli {

inline constexpr const char* kToolName = "ripscrush";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int
{
    kOk = 0,
    kMathFailure = 1,
    kUsageError = 2,
};

/** Runs the command line `args` (without the program name). Never throws. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ripscrush::cli
