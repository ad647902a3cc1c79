#pragma once

#include <iosfwd>

namespace semitop {

/// Command-line entry point. Returns 0 on success, 1 when a check or diff
/// fails, 2 on usage, parse or schema errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semitop
