#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weylnorm {

enum ExitCode : int { kExitPass = 0, kExitMathFailure = 1, kExitConfigError = 2, kExitCapExceeded = 3 };

struct RunConfig {
  std::string command;
  std::string type_label;
  int rank = 0;
  std::string rep = "adjoint";
  bool json = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> cap;
  std::string lift = "tits";
  bool tilde = false;
  bool with_matrices = false;
};

/// Throws ConfigError naming the offending flag.
void validate(const RunConfig& cfg);

/// WEYLNORM_THREADS if set and valid, else 1.
unsigned default_threads();

/// Parses argv-style arguments (args[0] is the program name), runs the
/// command and returns the exit code. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylnorm
