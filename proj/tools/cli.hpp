#pragma once

#include <ostream>

namespace forge::cli {

// Exit codes: 0 success / consistent verdict, 1 inconsistent verdict,
// 2 bad input, 3 radius or budget limits.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace forge::cli
