#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace typik::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not entailed / unsatisfiable
inline constexpr int kExitError = 2;

/// Runs one command line (args[0] is the program name). Normal output goes to
/// `out`; errors are written to `err` as a single JSON error record.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace typik::cli
