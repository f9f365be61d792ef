#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gzbt::cli {

/// Exit codes of `run`.
enum Exit : int { Ok = 0, Failed = 1, Usage = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gzbt::cli
