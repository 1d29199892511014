#pragma once

#include <iosfwd>

namespace sgcli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kUsageError = 3,
  kInconclusive = 4,
};

// Entry point of the sg tool, with the streams injectable for tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgcli
