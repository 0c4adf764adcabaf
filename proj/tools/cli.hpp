#pragma once

#include <ostream>

namespace quartic::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitResource = 3,
};

/// Entry point shared by the `quartic` binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
