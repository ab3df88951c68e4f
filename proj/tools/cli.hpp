#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubicdet::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kPrecondition = 2,
  kParseOrIo = 3,
};

/// Runs the command line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubicdet::cli
