#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorcert::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kCertified = 0,
    kNotCertified = 1,
    kPreconditionFailure = 2,
    kParseError = 3,
};

/// Environment variable holding the default --seed.
inline constexpr const char* kSeedEnv = "TENSORCERT_SEED";

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tensorcert::cli
