#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace multitwist::cli {

inline constexpr const char* kSchema = "multitwist.report/1";

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

/// Runs one command line (without the program name).  Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multitwist::cli
