#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qalcove::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace qalcove::cli
