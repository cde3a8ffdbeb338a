#pragma once

namespace sgraph {

// Command-line front end. argv follows the main() convention; returns the
// process exit code: 0 success, 2 usage error, 1 numerical failure (the
// failure is also written as a machine-readable JSON error record).
int run_cli(int argc, const char* const* argv);

}  // namespace sgraph
