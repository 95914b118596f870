#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "normed/rational.hpp"
#include "normed/serialization.hpp"

namespace normed::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kRefusal = 2, kParseError = 3 };

/// Global options plus everything loaded from disk for one invocation.
struct Workspace {
  serialization::ScalarMode mode = serialization::ScalarMode::real;
  unsigned degree_cap = 20;
  std::size_t universe_size = 3;
  Rational precision = default_precision();

  /// Reads and parses a JSON file; a missing file is a DomainError.
  serialization::Json load(const std::string& path) const;
};

/// Runs one command line (args exclude the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normed::cli
