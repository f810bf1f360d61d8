#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfdesc::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success (verify: self-descriptive; crosscheck: agreement),
/// 1 negative verdict, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main() adapter writing to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace selfdesc::cli
