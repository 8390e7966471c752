#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orthograph/algebra.hpp"

namespace orthograph::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMathError = 1,     ///< NotAVertex, Disconnected, and other mathematical failures
  kUsageError = 2,    ///< bad arguments, unparsable matrices, unsupported fields
  kVerifyFailed = 3,  ///< a `verify` check failed
};

struct CliConfig {
  std::string field = "2";
  std::size_t n = 0;  ///< 0: infer from the matrices
  std::string algebra = "tn";
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t max_size = kDefaultMaxEnumeration;
  std::string file;
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for a library error.
int exit_code_for(Errc code);

}  // namespace orthograph::cli
