#pragma once

#include <iosfwd>

namespace tamari {

/// Entry point of the command-line tool, with injectable streams for tests.
/// Returns the process exit code; failures print a one-line JSON error to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tamari
