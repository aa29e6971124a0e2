#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (args excludes the program name). All output goes to
// the given streams, so identical arguments give identical bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsc::cli
