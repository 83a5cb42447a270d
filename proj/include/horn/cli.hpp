#pragma once

#include <ostream>

namespace horn {

// Entry point of the `horn` command line tool. Exit codes: 0 success, 1 domain
// error, 2 parse or usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace horn
