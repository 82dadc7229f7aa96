#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bott::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kDomainError = 2,
  kVerificationFailed = 3,
};

/// Run the bott command line. args excludes the program name. JSON goes to
/// out, diagnostics to err; in is read when an input is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bott::cli
