#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace godisc::cli {

/// Runs one command line (argv[0] is the program name). Results go to the
/// --out file or `out`; diagnostics go to `err`.
/// Returns 0 on success, 1 on a computation error, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace godisc::cli
