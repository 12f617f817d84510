#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flowfilter::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to files or
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowfilter::cli
