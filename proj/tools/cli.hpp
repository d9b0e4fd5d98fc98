#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chowbg::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kUnsupported = 3,
};

/// Runs one command line (without the program name). Output is written
/// only after the computation has finished.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace chowbg::cli
