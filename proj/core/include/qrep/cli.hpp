#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrep {

// Runs one command line (without the program name). Writes the report to
// `out` and diagnostics to `err`. Exit codes: 0 success, 2 input/parse error,
// 3 precondition violation, 4 internal invariant failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep
