#pragma once

#include <iosfwd>

namespace edgebetti::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kResourceError = 3;
inline constexpr int kInvariantViolation = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgebetti::cli
