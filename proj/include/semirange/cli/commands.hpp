#pragma once

#include <ostream>

namespace semirange::cli {

enum ExitCode : int { kOk = 0, kParseError = 2, kInvalidA = 3, kEmptyRange = 4, kCheckFailed = 5 };

/// Entry point of the `semirange` tool: classify, range and verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semirange::cli
