#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyrolab {

/// Runs one command line (arguments without the program name). Returns
/// the exit code: 0 success, 1 computation or I/O error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyrolab
