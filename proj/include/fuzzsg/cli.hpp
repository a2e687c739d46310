#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "fuzzsg/semigroup.hpp"
#include "fuzzsg/verify.hpp"

namespace fuzzsg::cli {

  /// Process exit codes.  0, 1 and 2 are a stable contract.
  enum ExitCode : int {
    exit_pass           = 0,
    exit_counterexample = 1,
    exit_usage          = 2,
    exit_internal       = 3
  };

  /// Reads a semigroup JSON file.  Throws Error on I/O failure, SchemaError
  /// naming the offending field, AssociativityError with the witness.
  Semigroup parse_semigroup_file(std::filesystem::path const& path);

  int exit_code(VerificationReport const& report);

  /// Runs one command line (without the program name) and returns the exit
  /// code.  Verbs: analyze, convolve, star, decompose, verify, enumerate,
  /// catalog.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzsg::cli
