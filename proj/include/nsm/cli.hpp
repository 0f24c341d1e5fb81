#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsm {

/// Command-line entry point. `args` excludes the program name.
///
/// Subcommands:
///   validate FILE
///   op --kind union|intersect|complement|transpose [--norm N]
///      [--complement-mode identity_i|one_minus_i] A [B] [-o OUT]
///   product --kind and|or [--norm N] A B [-o OUT]
///   decide [--product and|or] [--norm N] [--format table|json] A B
///
/// Exit codes: 0 success, 2 validation error, 3 shape mismatch, 4 usage error.
/// The environment variable NSM_PRECISION (0..17) overrides the number of
/// decimals in table output (default 4).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// argv wrapper around the stream-based overload (stdout/stderr).
int run_cli(int argc, const char* const* argv);

}  // namespace nsm
