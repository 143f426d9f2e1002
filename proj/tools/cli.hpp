#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpham::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBadASequence = 3,
  kIntegrity = 4,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpham::cli
