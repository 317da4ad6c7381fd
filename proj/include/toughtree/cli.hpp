#pragma once

#include <iosfwd>

namespace toughtree::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kUsageError = 2,
  kUnknown = 3,
};

/// Runs one command line. Graph streams given as "-" are read from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toughtree::cli
