#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qep::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUnsat = 1,
  kParseError = 2,
  kInputError = 3,
  kOracleMismatch = 4,
  kSemanticsDiverge = 5,
};

// Runs the qep command line. args excludes the program name; the theory is
// read from the named file, or from in when no file (or "-") is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qep::cli
