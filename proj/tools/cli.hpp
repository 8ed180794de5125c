#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atfree {

// Full command surface behind the `atfree` binary, separated from main() so
// tests can drive it with in-memory streams.  args excludes the program name.
// Returns the process exit code: 0 = property holds / output complete,
// 1 = property fails (counterexamples on stdout, "CE " prefixed),
// 2 = usage or input error (message on stderr).
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace atfree
