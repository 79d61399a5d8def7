#pragma once

namespace ddrc::cli {

/// Dispatches the ddrc subcommands (gen-data, build, solve, simulate,
/// reproduce). Returns the process exit code: 0 success, 2 configuration
/// error, 3 data error, 4 solver non-optimal, 5 internal failure.
int run(int argc, char** argv);

} // namespace ddrc::cli
