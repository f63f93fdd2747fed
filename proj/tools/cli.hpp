#pragma once

#include <ostream>

namespace slr::cli {

// Exit codes: 0 success, 2 precondition or verification failure, 1 internal
// error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slr::cli
