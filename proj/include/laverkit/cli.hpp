#pragma once

#include <iosfwd>

namespace laverkit {

// Full command-line driver.  Returns the process exit code:
//   0 success, 1 domain error (error name printed to err), 2 usage error.
// With --json, results and errors are wrapped as single-line JSON on out.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace laverkit
