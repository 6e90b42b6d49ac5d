#pragma once

#include <iosfwd>

namespace ar1lt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kDomainError = 2,
  kUsageError = 64,
};

/// Entry point shared by the executable and the tests. Data goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ar1lt::cli
