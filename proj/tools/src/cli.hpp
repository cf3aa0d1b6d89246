#ifndef LAGMULT_TOOLS_CLI_HPP
#define LAGMULT_TOOLS_CLI_HPP

#include <ostream>

namespace lagmult::tools {

/// Whole CLI behind a testable seam. CSV goes to --out or `out`, the
/// human report to `err`. Returns 0 pass, 1 failed check, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lagmult::tools

#endif
