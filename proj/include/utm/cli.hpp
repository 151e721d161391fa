#pragma once

#include <iosfwd>

namespace utm {

// returns the process exit code: 0 ok, 2 user error, 3 degenerate, 4 numerical
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace utm
