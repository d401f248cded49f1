#pragma once

#include <iosfwd>

namespace trichain::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitClaimsFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (argv[0] is the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
///
/// Subcommands: info, index, enumerate, extremal, verify, export-dot.
/// Exit status: 0 success, 1 a verified claim failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trichain::cli
