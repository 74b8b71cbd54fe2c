#pragma once

#include <iosfwd>

namespace brieskorn {

/// Entry point of the `brieskorn` command. Returns the process exit code:
/// 0 success, 1 usage, 2 validation, 3 budget, 4 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brieskorn
