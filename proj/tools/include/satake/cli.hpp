#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satake {

// Runs the command line front end on already-split arguments (without the
// program name).  All regular output goes to `out`, diagnostics to `err`.
// Returns the process exit code: 0 on success, 1 on a domain error (bad
// flags, malformed input, unknown preset), 2 on a verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace satake
