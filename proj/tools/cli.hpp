#pragma once

// Command-line front end. `run` is the whole program minus process exit so
// tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace slicefock::cli {

enum ExitCode : int {
  kOk = 0,
  kPropositionFailed = 1,
  kInputError = 2,
  kQuadratureError = 3,
};

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slicefock::cli
