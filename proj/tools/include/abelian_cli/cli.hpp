#pragma once

#include <string>
#include <vector>

namespace abelian::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad flags, unreadable file, malformed JSON
  kValidation = 2,  // well-formed input violating a precondition (zero code, bad spec, ...)
  kBudget = 3,
  kMismatch = 4,    // verify found engine and oracle disagreeing
  kInternal = 5,
};

struct CliResult {
  int exit_code = kOk;
  std::string out;  // JSON document, newline-terminated; empty on error
  std::string err;  // diagnostics and human-readable tables
};

/// Runs one command; args exclude the program name. --output is honored by
/// writing the file, in which case `out` stays empty.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace abelian::cli
