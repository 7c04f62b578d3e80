#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nct {

/// Runs one CLI invocation (args exclude the program name) and writes all
/// output to the given streams.  Exit status: 0 success, 1 usage error,
/// 2 data error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nct
