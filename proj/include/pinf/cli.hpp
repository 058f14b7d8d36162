#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace pinf {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 computation-level
/// failure (not invertible, failed verification, rejected certificate),
/// 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* in = nullptr);

}  // namespace pinf
