#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhmap::cli {

/// Runs one rhmap invocation. Exit codes: 0 success, 1 selftest failure,
/// 2 precondition error ("error: <code>: <message>" on err), 64 bad usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhmap::cli
