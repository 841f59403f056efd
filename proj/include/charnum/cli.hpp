// Command-line dispatch. Exposed as a function over streams so the binary
// and the tests share one code path.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charnum {

// Runs one command (args exclude the program name) writing the report to
// `out` and diagnostics to `err`. Returns 0 on success, 2 for validation
// errors, 3 when the computation flags a mathematical degeneracy
// (identically zero obstruction).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charnum
