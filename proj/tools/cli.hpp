#pragma once

#include <iosfwd>

namespace adsbh::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kNoBracket = 3 };

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adsbh::cli
