#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detconc::cli {

enum ExitCode : int {
    kSuccess = 0,       // command succeeded / verdict true
    kNegative = 1,      // valid input, negative verdict
    kInputError = 2,    // malformed arguments or documents
};

/// Runs one command line (without the program name). `in` backs the "-"
/// path argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace detconc::cli
