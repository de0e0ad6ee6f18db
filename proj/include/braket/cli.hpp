#pragma once

#include <iosfwd>

namespace braket {

/// Runs the command line tool. Exit codes: 0 success, 1 domain error,
/// 2 usage error. JSON results go to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braket
