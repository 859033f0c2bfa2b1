#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twlayout::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;

/// Runs one command line (without the program name). Artifacts go to `out`
/// unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twlayout::cli
